// Typed client for the JSON service. Every route is a POST; errors come back
// as {error: {code, message, at}} and are rethrown as ApiError.

export interface Rows {
  rows: number[][];
}

export interface WireWord {
  letters: number[];
}

export interface BumpStep {
  index: number;
  from?: number;
  to?: number;
  shift?: boolean;
}

export interface BumpTrace {
  start: number;
  steps: BumpStep[];
  result: WireWord;
}

export interface Grassmannian {
  k: number;
  row_labels: number[];
  col_labels: number[];
}

export interface ParseResponse {
  letters: number[];
  n: number;
  perm: number[];
  reduced: boolean;
  word_descents: number[];
}

export interface InsertionStep {
  letter: number;
  path: number[][];
}

export interface EgResponse {
  letters: number[];
  p: Rows;
  q: Rows;
  steps: InsertionStep[];
}

export interface LittleResponse {
  letters: number[];
  tableau: Rows;
  traces: BumpTrace[];
  final: WireWord;
  grassmannian: Grassmannian | null;
}

export interface BumpResponse extends BumpTrace {
  letters: number[];
}

export interface CkMove {
  pos: number;
  kind: string;
  direction: string;
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly at: number | null = null,
  ) {
    super(message);
  }
}

export class Client {
  constructor(readonly base: string = "") {}

  private async post<T>(route: string, body: unknown): Promise<T> {
    const response = await fetch(this.base + route, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      const err = payload?.error ?? { code: "internal", message: "unknown failure", at: null };
      throw new ApiError(err.code, err.message, err.at);
    }
    return payload as T;
  }

  parse(text: string): Promise<ParseResponse> {
    return this.post("/api/parse", { text });
  }

  eg(letters: number[]): Promise<EgResponse> {
    return this.post("/api/eg", { letters });
  }

  little(letters: number[]): Promise<LittleResponse> {
    return this.post("/api/little", { letters });
  }

  bump(letters: number[], start: number): Promise<BumpResponse> {
    return this.post("/api/bump", { letters, start });
  }

  inverseBump(letters: number[], start: number): Promise<BumpResponse> {
    return this.post("/api/inverse_bump", { letters, start });
  }

  ckMoves(letters: number[]): Promise<{ letters: number[]; moves: CkMove[] }> {
    return this.post("/api/ck/moves", { letters });
  }

  ckApply(
    letters: number[],
    pos: number,
    kind?: string,
    direction?: string,
  ): Promise<{ letters: number[]; move: CkMove; result: WireWord }> {
    const body: Record<string, unknown> = { letters, pos };
    if (kind) body.kind = kind;
    if (direction) body.direction = direction;
    return this.post("/api/ck/apply", body);
  }

  tab(letters: number[]): Promise<{ letters: number[]; tableau: Rows; grassmannian: Grassmannian | null }> {
    return this.post("/api/tab", { letters });
  }

  normalize(letters: number[]): Promise<{ letters: number[]; result: WireWord; traces: BumpTrace[] }> {
    return this.post("/api/normalize", { letters });
  }

  renderSvg(letters: number[], highlight: number[] = []): Promise<{ letters: number[]; svg: string }> {
    return this.post("/api/render/svg", { letters, highlight });
  }
}

// The explorer's state machine. The client is a thin view: every panel value
// comes from the service, bump playback merely replays recorded steps, and
// committed actions recompute the panels from scratch. Responses that arrive
// after a newer action are discarded via a request-generation counter.

import { ApiError, Client } from "./api.js";
import type { BumpTrace, CkMove, Grassmannian } from "./api.js";
import { wordAtCursor } from "./trace.js";

export interface Panels {
  p: number[][];
  q: number[][];
  ls: number[][] | null;
  lsNote: string | null;
  descents: number[];
}

export interface HistoryEntry {
  word: number[];
  action: string;
  panels: Panels;
  svg: string;
  grassmannian: Grassmannian | null;
}

export interface Pending {
  trace: BumpTrace;
  cursor: number;
}

export interface ExplorerState {
  word: number[] | null;
  svg: string;
  panels: Panels | null;
  grassmannian: Grassmannian | null;
  pending: Pending | null;
  history: HistoryEntry[];
  error: string | null;
}

const EMPTY: ExplorerState = {
  word: null,
  svg: "",
  panels: null,
  grassmannian: null,
  pending: null,
  history: [],
  error: null,
};

interface Snapshot {
  panels: Panels;
  svg: string;
  grassmannian: Grassmannian | null;
}

export class Explorer {
  state: ExplorerState = { ...EMPTY };
  private generation = 0;
  private listeners: Array<() => void> = [];
  // diagram of the committed word, before any playback preview replaced it
  private cleanSvg = "";

  constructor(private api: Client) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  private set(patch: Partial<ExplorerState>): void {
    this.state = { ...this.state, ...patch };
    this.emit();
  }

  /** Fetch everything the panels show for a word. Pure service round trips. */
  private async snapshot(word: number[], highlight: number[] = []): Promise<Snapshot> {
    const [parsed, insertion, rendered] = await Promise.all([
      this.api.parse(word.join(" ")),
      this.api.eg(word),
      this.api.renderSvg(word, highlight),
    ]);
    let ls: number[][] | null = null;
    let lsNote: string | null = null;
    let grassmannian: Grassmannian | null = null;
    try {
      const little = await this.api.little(word);
      ls = little.tableau.rows;
      grassmannian = little.grassmannian;
    } catch (err) {
      lsNote = err instanceof ApiError ? err.message : String(err);
    }
    return {
      panels: {
        p: insertion.p.rows,
        q: insertion.q.rows,
        ls,
        lsNote,
        descents: parsed.word_descents,
      },
      svg: rendered.svg,
      grassmannian,
    };
  }

  async loadWord(text: string): Promise<void> {
    const gen = ++this.generation;
    try {
      const parsed = await this.api.parse(text);
      const snap = await this.snapshot(parsed.letters);
      if (gen !== this.generation) return;
      this.cleanSvg = snap.svg;
      this.set({
        word: parsed.letters,
        ...snap,
        pending: null,
        history: [],
        error: null,
      });
    } catch (err) {
      if (gen !== this.generation) return;
      this.set({ error: err instanceof Error ? err.message : String(err) });
    }
  }

  async clickCrossing(index: number): Promise<void> {
    const word = this.state.word;
    if (!word) {
      this.set({ error: "no word loaded" });
      return;
    }
    if (!Number.isInteger(index) || index < 1 || index > word.length) {
      this.set({ error: `crossing ${index} is out of range` });
      return;
    }
    const gen = ++this.generation;
    try {
      const trace = await this.api.bump(word, index);
      const preview = await this.api.renderSvg(word, [index]);
      if (gen !== this.generation) return;
      this.set({
        pending: { trace: { start: trace.start, steps: trace.steps, result: trace.result }, cursor: 0 },
        svg: preview.svg,
        error: null,
      });
    } catch (err) {
      if (gen !== this.generation) return;
      this.set({ error: err instanceof Error ? err.message : String(err) });
    }
  }

  /** The word the diagram shows at the current playback cursor. */
  playbackWord(): number[] | null {
    const { word, pending } = this.state;
    if (!word) return null;
    if (!pending) return word;
    return wordAtCursor(word, pending.trace, pending.cursor);
  }

  async stepTrace(direction: "forward" | "back" | "commit"): Promise<void> {
    const { word, pending } = this.state;
    if (!word || !pending) {
      this.set({ error: "no bump in progress" });
      return;
    }
    if (direction === "commit") {
      await this.commitWord(pending.trace.result.letters, "bump");
      return;
    }
    const steps = pending.trace.steps.length;
    const cursor =
      direction === "forward"
        ? Math.min(pending.cursor + 1, steps)
        : Math.max(pending.cursor - 1, 0);
    if (cursor === pending.cursor) return; // clamped no-op
    const gen = ++this.generation;
    const shown = wordAtCursor(word, pending.trace, cursor);
    const next = cursor < steps ? [pending.trace.steps[cursor].index] : [];
    try {
      const rendered = await this.api.renderSvg(shown, next);
      if (gen !== this.generation) return;
      this.set({ pending: { ...pending, cursor }, svg: rendered.svg, error: null });
    } catch (err) {
      if (gen !== this.generation) return;
      this.set({ error: err instanceof Error ? err.message : String(err) });
    }
  }

  private pushHistory(action: string): HistoryEntry[] {
    const { word, panels, grassmannian, history } = this.state;
    if (!word || !panels) return history;
    return [...history, { word, action, panels, svg: this.cleanSvg, grassmannian }];
  }

  private async commitWord(next: number[], action: string): Promise<void> {
    const gen = ++this.generation;
    try {
      const snap = await this.snapshot(next);
      if (gen !== this.generation) return;
      const history = this.pushHistory(action);
      this.cleanSvg = snap.svg;
      this.set({
        word: next,
        ...snap,
        pending: null,
        history,
        error: null,
      });
    } catch (err) {
      if (gen !== this.generation) return;
      this.set({ error: err instanceof Error ? err.message : String(err) });
    }
  }

  async movesAvailable(): Promise<CkMove[]> {
    const word = this.state.word;
    if (!word) return [];
    const response = await this.api.ckMoves(word);
    return response.moves;
  }

  async applyCk(pos: number, kind?: string, direction?: string): Promise<void> {
    const word = this.state.word;
    if (!word) {
      this.set({ error: "no word loaded" });
      return;
    }
    try {
      const applied = await this.api.ckApply(word, pos, kind, direction);
      await this.commitWord(applied.result.letters, `ck@${pos}`);
    } catch (err) {
      this.set({ error: err instanceof Error ? err.message : String(err) });
    }
  }

  /**
   * Drive the canonical bump sequence one bump at a time, through the same
   * click/step/commit path a user would take. onCommit fires after each bump
   * lands, with the trace that was just played.
   */
  async runLsStepwise(onCommit?: (trace: BumpTrace) => void | Promise<void>): Promise<void> {
    const word = this.state.word;
    if (!word) {
      this.set({ error: "no word loaded" });
      return;
    }
    let expected: BumpTrace[];
    try {
      expected = (await this.api.little(word)).traces;
    } catch (err) {
      this.set({ error: err instanceof Error ? err.message : String(err) });
      return;
    }
    for (const reference of expected) {
      await this.clickCrossing(reference.start);
      const pending = this.state.pending;
      if (!pending) return; // click surfaced an error
      while (this.state.pending && this.state.pending.cursor < pending.trace.steps.length) {
        await this.stepTrace("forward");
      }
      const played = this.state.pending?.trace ?? pending.trace;
      await this.stepTrace("commit");
      if (this.state.error) return;
      if (onCommit) await onCommit(played);
    }
  }

  undo(): void {
    const history = this.state.history;
    if (!history.length) return;
    const last = history[history.length - 1];
    this.cleanSvg = last.svg;
    this.set({
      word: last.word,
      panels: last.panels,
      svg: last.svg,
      grassmannian: last.grassmannian,
      history: history.slice(0, -1),
      pending: null,
      error: null,
    });
  }
}

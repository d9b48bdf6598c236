// Browser wiring: render the explorer state into the page and forward
// clicks. All state changes go through the Explorer; this file only draws.

import type { Explorer } from "./state.js";
import type { Grassmannian } from "./api.js";

function tableauHtml(rows: number[][] | null, note: string | null = null): string {
  if (note) return `<p class="note">${note}</p>`;
  if (!rows || !rows.length) return '<p class="note">empty</p>';
  const body = rows
    .map((row) => `<tr>${row.map((x) => `<td>${x}</td>`).join("")}</tr>`)
    .join("");
  return `<table class="tableau">${body}</table>`;
}

function labelled(gd: Grassmannian | null): string {
  if (!gd) return "";
  return `<p class="labels">rows ${gd.row_labels.join(",")} / cols ${gd.col_labels.join(",")}</p>`;
}

export function mount(explorer: Explorer, root: HTMLElement): void {
  root.innerHTML = `
    <div class="bar">
      <input id="word-input" size="40" placeholder="word, e.g. 4 2 1 2 3 2 4" />
      <button id="load">load</button>
      <button id="run-ls">run LS</button>
      <button id="undo">undo</button>
      <span id="error" class="error"></span>
    </div>
    <div class="bar" id="trace-bar" hidden>
      <button id="back">&larr; back</button>
      <span id="cursor"></span>
      <button id="forward">forward &rarr;</button>
      <button id="commit">commit</button>
      <label><input type="checkbox" id="autoplay" /> autoplay</label>
    </div>
    <div id="diagram"></div>
    <div class="bar" id="moves"></div>
    <div class="panels">
      <div><h3>P</h3><div id="panel-p"></div></div>
      <div><h3>Q</h3><div id="panel-q"></div></div>
      <div><h3>LS</h3><div id="panel-ls"></div><div id="panel-labels"></div></div>
      <div><h3>descents</h3><div id="panel-descents"></div></div>
    </div>
  `;

  const byId = (id: string) => root.querySelector(`#${id}`) as HTMLElement;
  const input = byId("word-input") as HTMLInputElement;
  const autoplay = byId("autoplay") as HTMLInputElement;

  byId("load").addEventListener("click", () => explorer.loadWord(input.value));
  byId("run-ls").addEventListener("click", () => explorer.runLsStepwise());
  byId("undo").addEventListener("click", () => explorer.undo());
  byId("back").addEventListener("click", () => explorer.stepTrace("back"));
  byId("forward").addEventListener("click", () => explorer.stepTrace("forward"));
  byId("commit").addEventListener("click", () => explorer.stepTrace("commit"));

  autoplay.addEventListener("change", () => {
    if (!autoplay.checked) return;
    const tick = async () => {
      if (!autoplay.checked || !explorer.state.pending) return;
      const { trace, cursor } = explorer.state.pending;
      await explorer.stepTrace(cursor < trace.steps.length ? "forward" : "commit");
      setTimeout(tick, 350);
    };
    void tick();
  });

  byId("diagram").addEventListener("click", (event) => {
    const target = (event.target as Element).closest('[id^="crossing-"]');
    if (!target) return;
    const index = Number(target.id.slice("crossing-".length));
    void explorer.clickCrossing(index);
  });

  byId("moves").addEventListener("click", (event) => {
    const button = (event.target as Element).closest("button[data-pos]");
    if (!button) return;
    void explorer.applyCk(Number((button as HTMLElement).dataset.pos));
  });

  const redraw = async () => {
    const s = explorer.state;
    byId("error").textContent = s.error ?? "";
    byId("diagram").innerHTML = s.svg;
    const traceBar = byId("trace-bar");
    traceBar.hidden = !s.pending;
    if (s.pending) {
      byId("cursor").textContent = `${s.pending.cursor} / ${s.pending.trace.steps.length}`;
    }
    byId("panel-p").innerHTML = tableauHtml(s.panels?.p ?? null);
    byId("panel-q").innerHTML = tableauHtml(s.panels?.q ?? null);
    byId("panel-ls").innerHTML = tableauHtml(s.panels?.ls ?? null, s.panels?.lsNote ?? null);
    byId("panel-labels").innerHTML = labelled(s.grassmannian);
    byId("panel-descents").textContent = s.panels ? `{${s.panels.descents.join(", ")}}` : "";
    const moves = s.word && !s.pending ? await explorer.movesAvailable() : [];
    byId("moves").innerHTML = moves
      .map(
        (m) =>
          `<button data-pos="${m.pos}">${m.kind} ${m.direction} @ ${m.pos}</button>`,
      )
      .join(" ");
  };

  explorer.onChange(() => void redraw());
  void redraw();
}

// Replay of recorded bump steps. The client never decides anything here: a
// step carries its index and new value (or the shift marker), so playback is
// pure bookkeeping.

import type { BumpStep, BumpTrace } from "./api.js";

export function applyStep(word: number[], step: BumpStep): number[] {
  if (step.shift) {
    return word.map((x, i) => (i === step.index - 1 ? x : x + 1));
  }
  const out = word.slice();
  out[step.index - 1] = step.to as number;
  return out;
}

export function wordAtCursor(origin: number[], trace: BumpTrace, cursor: number): number[] {
  let word = origin;
  for (let i = 0; i < cursor; i++) {
    word = applyStep(word, trace.steps[i]);
  }
  return word;
}

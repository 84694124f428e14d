import { describe, expect, it } from "vitest";

import {
  boardFromReload,
  canUndo,
  emptyBoard,
  withCommittedStep,
  withPreview,
  withUndo,
  withoutPreview,
  type Board,
  type TraceDoc,
} from "../src/board.js";
import type { StateResponse, StepResponse } from "../src/types.js";

import fixture from "./fixtures/demo.json";

const created = fixture.created as StateResponse;
const steps = fixture.steps as StepResponse[];
const previews = fixture.previews as StepResponse[];
const state = fixture.state as StateResponse;
const trace = fixture.trace as TraceDoc;
const undoState = fixture.undo_state as StateResponse;

function accumulate(count: number): Board {
  let board = emptyBoard(created);
  for (const response of steps.slice(0, count)) {
    board = withCommittedStep(board, response.step);
  }
  return board;
}

describe("board reducers", () => {
  it("starts empty with the session snapshots", () => {
    const board = emptyBoard(created);
    expect(board.timeline).toEqual([]);
    expect(board.preview).toBeNull();
    expect(board.snapshots).toEqual(created.state.agents);
    expect(canUndo(board)).toBe(false);
  });

  it("appends committed steps and tracks the latest snapshots", () => {
    const board = accumulate(steps.length);
    expect(board.timeline).toHaveLength(steps.length);
    expect(board.snapshots).toEqual(steps[steps.length - 1].step.agents);
    expect(canUndo(board)).toBe(true);
  });

  it("board after scripted demo entry equals board after a reload", () => {
    const entered = accumulate(steps.length);
    const reloaded = boardFromReload(state, trace);
    expect(entered).toEqual(reloaded);
  });

  it("preview is set and cleared without touching the timeline", () => {
    const board = accumulate(3);
    const ghosted = withPreview(board, previews[3].step);
    expect(ghosted.preview).toEqual(previews[3].step);
    expect(ghosted.timeline).toEqual(board.timeline);
    expect(ghosted.snapshots).toEqual(board.snapshots);
    expect(withoutPreview(ghosted)).toEqual(board);
  });

  it("committing clears any pending preview", () => {
    const board = withPreview(accumulate(3), previews[3].step);
    expect(withCommittedStep(board, steps[3].step).preview).toBeNull();
  });

  it("undo drops the last step and adopts the server snapshots", () => {
    const undone = withUndo(accumulate(steps.length), undoState);
    const expected = accumulate(steps.length - 1);
    expect(undone.timeline).toEqual(expected.timeline);
    expect(undone.snapshots).toEqual(expected.snapshots);
  });
});

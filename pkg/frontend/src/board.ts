import type {
  AgentRef,
  AgentSnapshotDoc,
  StateResponse,
  StepDoc,
} from "./types.js";

/** The whole view state. Snapshots and timeline entries are server
 * documents stored as-is; reducers only move them around. */
export interface Board {
  agents: AgentRef[];
  snapshots: AgentSnapshotDoc[];
  timeline: StepDoc[];
  preview: StepDoc | null;
}

export interface TraceDoc {
  schema_version: number;
  agents: AgentRef[];
  steps: StepDoc[];
  final: { agents: AgentSnapshotDoc[] };
}

export function emptyBoard(state: StateResponse): Board {
  return {
    agents: state.agents,
    snapshots: state.state.agents,
    timeline: [],
    preview: null,
  };
}

export function withCommittedStep(board: Board, step: StepDoc): Board {
  return {
    agents: board.agents,
    snapshots: step.agents,
    timeline: [...board.timeline, step],
    preview: null,
  };
}

export function withPreview(board: Board, step: StepDoc): Board {
  return { ...board, preview: step };
}

export function withoutPreview(board: Board): Board {
  return { ...board, preview: null };
}

export function withUndo(board: Board, state: StateResponse): Board {
  return {
    agents: board.agents,
    snapshots: state.state.agents,
    timeline: board.timeline.slice(0, -1),
    preview: null,
  };
}

/** Rebuild the board from scratch after a reload: the trace carries the
 * timeline, the state document the current snapshots. */
export function boardFromReload(state: StateResponse, trace: TraceDoc): Board {
  return {
    agents: state.agents,
    snapshots: state.state.agents,
    timeline: trace.steps,
    preview: null,
  };
}

export function agentLabel(agents: AgentRef[], id: number): string {
  const ref = agents.find((a) => a.id === id);
  return ref?.name ?? `agent ${id}`;
}

export function canUndo(board: Board): boolean {
  return board.timeline.length > 0;
}

import {
  boardFromReload,
  canUndo,
  emptyBoard,
  withCommittedStep,
  withPreview,
  withUndo,
  withoutPreview,
  type Board,
} from "./board.js";
import { ApiError, SessionClient, type EventBody } from "./client.js";
import { renderBoard } from "./render.js";

const DEMO_EVENTS: Array<[number, number, number]> = [
  [1, 2, 1],
  [2, 1, 1],
  [3, 1, 0],
  [3, 2, -1],
  [2, 3, -2],
  [1, 3, 2],
  [2, 3, 2],
  [2, 2, 2],
  [2, 2, 2],
  [2, 2, 1],
  [3, 3, -4],
  [3, 3, -4],
  [3, 3, -2],
];

let client: SessionClient | null = null;
let board: Board | null = null;
let busy = false;

const $ = (id: string) => document.getElementById(id)!;

function setBoard(next: Board): void {
  board = next;
  $("board").innerHTML = renderBoard(next);
  ($("undo") as HTMLButtonElement).disabled = !canUndo(next) || busy;
  const id = client ? client.sessionId : "";
  $("session").textContent = id ? `session ${id.slice(0, 8)}` : "";
}

function setBusy(value: boolean): void {
  busy = value;
  for (const id of ["commit", "preview", "undo", "demo"]) {
    ($(id) as HTMLButtonElement).disabled = value;
  }
  if (board) {
    ($("undo") as HTMLButtonElement).disabled = value || !canUndo(board);
  }
}

function showError(message: string): void {
  $("error").textContent = message;
}

function readComposer(): EventBody | null {
  const causer = Number(($("causer") as HTMLInputElement).value);
  const target = Number(($("target") as HTMLInputElement).value);
  const utility = Number(($("utility") as HTMLInputElement).value);
  if (!Number.isInteger(causer) || !Number.isInteger(target) || !Number.isFinite(utility)) {
    showError("causer and target must be agent ordinals, utility a number");
    return null;
  }
  return { causer, target, utility };
}

async function guarded(action: () => Promise<void>): Promise<void> {
  if (busy || !client || !board) {
    return;
  }
  setBusy(true);
  showError("");
  try {
    await action();
  } catch (error) {
    showError(error instanceof ApiError ? error.message : String(error));
  } finally {
    setBusy(false);
    if (board) {
      setBoard(board);
    }
  }
}

async function newSession(agents: number): Promise<void> {
  const created = await SessionClient.create(agents);
  client = created.client;
  setBoard(emptyBoard(created.state));
}

function wire(): void {
  $("new").addEventListener("click", () =>
    guarded(async () => {
      const count = Number(($("agent-count") as HTMLInputElement).value);
      await newSession(count);
    }),
  );

  $("commit").addEventListener("click", () =>
    guarded(async () => {
      const body = readComposer();
      if (!body) return;
      const response = await client!.postEvent(body);
      setBoard(withCommittedStep(board!, response.step));
    }),
  );

  $("preview").addEventListener("click", () =>
    guarded(async () => {
      const body = readComposer();
      if (!body) return;
      const response = await client!.previewEvent(body);
      setBoard(withPreview(board!, response.step));
    }),
  );

  $("cancel-preview").addEventListener("click", () => {
    if (board) {
      setBoard(withoutPreview(board));
    }
  });

  $("undo").addEventListener("click", () =>
    guarded(async () => {
      const state = await client!.undo();
      setBoard(withUndo(board!, state));
    }),
  );

  $("reload").addEventListener("click", () =>
    guarded(async () => {
      const [state, trace] = await Promise.all([client!.getState(), client!.getTrace()]);
      setBoard(boardFromReload(state, trace));
    }),
  );

  $("demo").addEventListener("click", () =>
    guarded(async () => {
      await newSession(3);
      for (const [causer, target, utility] of DEMO_EVENTS) {
        const response = await client!.postEvent({ causer, target, utility });
        setBoard(withCommittedStep(board!, response.step));
      }
    }),
  );

  guarded(async () => newSession(3));
}

wire();

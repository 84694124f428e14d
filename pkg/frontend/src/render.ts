import { agentLabel, type Board } from "./board.js";
import type { AffectDoc, AgentSnapshotDoc, StepDoc } from "./types.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function num(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toFixed(3);
}

/** Target glyphs: →agent, ↻self, ⚙own action, ◈the event itself. */
function targetGlyph(board: Board, affect: AffectDoc): string {
  switch (affect.target_kind) {
    case "own_action":
      return "⚙ own action";
    case "self":
      return "↻ self";
    case "agent":
      return `→ ${esc(agentLabel(board.agents, affect.target))}`;
    case "event":
      if (affect.kind === "hope" || affect.kind === "fear") {
        return `→ ${esc(agentLabel(board.agents, affect.target))}`;
      }
      return "◈ event";
  }
}

export function renderAffect(board: Board, affect: AffectDoc): string {
  const conscious = affect.consciousness === "conscious";
  return (
    `<li class="affect ${conscious ? "conscious" : "preconscious"}">` +
    `<span class="kind">${esc(affect.kind)}</span> ` +
    `<span class="glyph">${targetGlyph(board, affect)}</span>` +
    `<span class="intensity">${num(affect.intensity)}</span></li>`
  );
}

export function renderAgentCard(board: Board, snapshot: AgentSnapshotDoc): string {
  const name = esc(agentLabel(board.agents, snapshot.id));
  const latest = board.timeline[board.timeline.length - 1];
  const affects = latest
    ? latest.affects.filter((a) => a.agent === snapshot.id)
    : [];
  const attention =
    snapshot.attention === null
      ? ""
      : `<div class="attention">attention: ${esc(agentLabel(board.agents, snapshot.attention))}</div>`;
  return (
    `<div class="card" data-agent="${snapshot.id}">` +
    `<h3>${name}</h3>` +
    `<span class="mood mood-${snapshot.mood}">${snapshot.mood}</span>` +
    (snapshot.depressed ? `<span class="depressed">depressed</span>` : "") +
    `<div class="efu">expected future utility: ${num(snapshot.efu)}</div>` +
    attention +
    `<ul class="affects">${affects.map((a) => renderAffect(board, a)).join("")}</ul>` +
    `</div>`
  );
}

/** Observer × object matrix of expectation means and attitudes. */
export function renderRelationMatrix(board: Board): string {
  const header = board.agents
    .map((a) => `<th>${esc(agentLabel(board.agents, a.id))}</th>`)
    .join("");
  const rows = board.snapshots
    .map((snapshot) => {
      const cells = board.agents
        .map((obj) => {
          const rel = snapshot.relations.find((r) => r.object === obj.id);
          if (!rel) {
            return `<td class="unknown">·</td>`;
          }
          return `<td class="${rel.attitude}">${num(rel.mean)}</td>`;
        })
        .join("");
      return `<tr><th>${esc(agentLabel(board.agents, snapshot.id))}</th>${cells}</tr>`;
    })
    .join("");
  return `<table class="matrix"><tr><th></th>${header}</tr>${rows}</table>`;
}

export function renderStep(board: Board, step: StepDoc): string {
  const e = step.event;
  const label = e.label ? ` (${esc(e.label)})` : "";
  return (
    `<li class="step" data-index="${step.index}">` +
    `<span class="edge">#${step.index}</span> ` +
    `${esc(agentLabel(board.agents, e.causer))} → ` +
    `${esc(agentLabel(board.agents, e.target))}: ${num(e.utility)}${label}` +
    `<ul>${step.affects.map((a) => `<li>${esc(agentLabel(board.agents, a.agent))}: ${renderAffect(board, a)}</li>`).join("")}</ul>` +
    `</li>`
  );
}

export function renderTimeline(board: Board): string {
  return `<ol class="timeline">${board.timeline.map((s) => renderStep(board, s)).join("")}</ol>`;
}

/** The what-if panel: same layout as a committed step, ghost-styled. */
export function renderPreviewPanel(board: Board): string {
  if (!board.preview) {
    return "";
  }
  return `<div class="ghost">${renderStep(board, board.preview)}</div>`;
}

export function renderBoard(board: Board): string {
  return (
    `<div class="cards">${board.snapshots.map((s) => renderAgentCard(board, s)).join("")}</div>` +
    renderRelationMatrix(board) +
    renderPreviewPanel(board) +
    renderTimeline(board)
  );
}

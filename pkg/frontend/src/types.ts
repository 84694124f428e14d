/** Wire types for the session API. Every displayed affect or value comes
 * verbatim from these documents; the client never computes affects. */

export interface AgentRef {
  id: number;
  name?: string;
}

export interface RelationDoc {
  object: number;
  count: number;
  sum: number;
  mean: number;
  attitude: "liked" | "neutral" | "disliked";
}

export interface AgentSnapshotDoc {
  id: number;
  mood: "good" | "neutral" | "bad";
  depressed: boolean;
  efu: number;
  attention: number | null;
  relations: RelationDoc[];
}

export interface AffectDoc {
  agent: number;
  kind: string;
  target_kind: "event" | "agent" | "self" | "own_action";
  target: number;
  intensity: number;
  consciousness: "conscious" | "preconscious";
}

export interface EventDoc {
  causer: number;
  target: number;
  utility: number;
  label?: string;
}

export interface StepDoc {
  index: number;
  event: EventDoc;
  affects: AffectDoc[];
  agents: AgentSnapshotDoc[];
}

export interface StepResponse {
  schema_version: number;
  step: StepDoc;
}

export interface StateResponse {
  schema_version: number;
  session_id: string;
  agents: AgentRef[];
  step_count: number;
  state: { agents: AgentSnapshotDoc[] };
}

export interface ApiErrorBody {
  schema_version: number;
  error: string;
}

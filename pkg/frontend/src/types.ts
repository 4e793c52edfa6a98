/** Payload types of the session-service HTTP API. */

export interface ScaleSpec {
  kind: "qualitative" | "quantitative";
  labels?: string[];
  range?: [number, number];
}

export interface CriterionSpec {
  id: string;
  scale: ScaleSpec;
}

export type CellValue = number | string | Array<number | string> | null;

export interface ProblemSpec {
  n: number;
  criteria: CriterionSpec[];
  alternatives: Record<string, Record<string, CellValue>>;
  reference?: string[];
  sorting?: SortingSpec | null;
}

export interface StatementIn {
  kind: string;
  alternatives: string[];
  criterion?: string | null;
  credibility?: number;
  author?: string;
}

export interface StatementEntry extends StatementIn {
  added_at?: string;
}

export interface SessionSummary {
  id: string;
  version: number;
  n: number;
  alternatives: string[];
  criteria: string[];
  reference: string[];
  compatible: boolean;
  epsilon: number | null;
  statements: StatementEntry[];
  sorting: SortingSpec | null;
}

export interface AddStatementResponse {
  version: number;
  compatible: boolean;
  epsilon: number | null;
}

export interface MatrixResponse {
  kind: string;
  order: string[];
  bits: boolean[][];
  boundary: string[][];
}

export interface HasseResponse {
  kind: string;
  nodes: string[][];
  arcs: Array<[number, number]>;
}

export interface SweepLevel {
  level: number;
  epsilon: number | null;
  necessary?: MatrixResponse | null;
  possible?: MatrixResponse | null;
}

export interface SweepResponse {
  levels: SweepLevel[];
  incompatible_from: number | null;
}

export interface SortingSpec {
  classes: string[];
  examples: Array<{ alt: string; L: number; R: number }>;
}

export interface SortingAssignment {
  possible: [number, number];
  necessary: [number, number] | null;
}

export interface SortingResponse {
  classes: string[];
  compatible: boolean;
  epsilon: number | null;
  assignments: Record<string, SortingAssignment>;
}

export interface RankEntry {
  best: number;
  worst: number;
}

export interface ExtremeRanksResponse {
  index: string;
  ranks: Record<string, RankEntry>;
}

export interface DiagnoseResponse {
  compatible: boolean;
  minimal_sets: number[][];
  exhaustive: boolean;
  statements: string[];
}

export interface ErrorBody {
  code: string;
  message: string;
  details?: unknown;
}

export const STATEMENT_KINDS = [
  "holistic-strict",
  "holistic-indiff",
  "intensity-strict",
  "intensity-indiff",
  "marginal-strict",
  "marginal-indiff",
  "marginal-intensity-strict",
  "marginal-intensity-indiff",
] as const;

export type StatementKind = (typeof STATEMENT_KINDS)[number];

export function statementArity(kind: string): number {
  return kind.includes("intensity") ? 4 : 2;
}

export function isMarginal(kind: string): boolean {
  return kind.startsWith("marginal");
}

/** Session view state: one server log version on screen at any time.
 *
 * Optimistic updates are forbidden; every transition refetches from the
 * service, and the displayed graph/matrix always carries the version it was
 * computed at.
 */

import { ApiClient, ApiError } from "./api.js";
import type {
  DiagnoseResponse,
  ExtremeRanksResponse,
  HasseResponse,
  MatrixResponse,
  ProblemSpec,
  SessionSummary,
  SortingResponse,
  SortingSpec,
  StatementIn,
} from "./types.js";

export interface RelationSelection {
  family: "necessary" | "possible";
  mode: "classic" | "strong" | "weak" | "ik";
  i: number;
  k: number;
  group: boolean;
  outer: "N" | "P";
  inner: "N" | "P";
  coalition: string[];
}

export interface ViewState {
  session: SessionSummary | null;
  selection: RelationSelection;
  /** version the graph/matrix below were computed at */
  viewVersion: number | null;
  graph: HasseResponse | null;
  matrix: MatrixResponse | null;
  diagnosis: DiagnoseResponse | null;
  sorting: SortingResponse | null;
  ranks: ExtremeRanksResponse | null;
  error: string | null;
  busy: boolean;
}

export function initialSelection(): RelationSelection {
  return {
    family: "necessary",
    mode: "classic",
    i: 1,
    k: 1,
    group: false,
    outer: "N",
    inner: "N",
    coalition: [],
  };
}

export function indexParam(selection: RelationSelection, n: number): string {
  switch (selection.mode) {
    case "classic":
      return "classic";
    case "strong":
      return "strong";
    case "weak":
      return "weak";
    case "ik": {
      const clamp = (v: number) => Math.min(Math.max(1, Math.round(v)), n);
      return `${clamp(selection.i)},${clamp(selection.k)}`;
    }
  }
}

export class SessionController {
  state: ViewState;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (state: ViewState) => void = () => undefined,
  ) {
    this.state = {
      session: null,
      selection: initialSelection(),
      viewVersion: null,
      graph: null,
      matrix: null,
      diagnosis: null,
      sorting: null,
      ranks: null,
      error: null,
      busy: false,
    };
  }

  private emit(): void {
    this.onChange(this.state);
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | undefined> {
    this.state.busy = true;
    this.state.error = null;
    this.emit();
    try {
      return await work();
    } catch (error) {
      this.state.error = error instanceof Error ? error.message : String(error);
      return undefined;
    } finally {
      this.state.busy = false;
      this.emit();
    }
  }

  get sessionId(): string {
    if (!this.state.session) throw new Error("no session loaded");
    return this.state.session.id;
  }

  async createSession(problem: ProblemSpec): Promise<void> {
    await this.guard(async () => {
      this.state.session = await this.api.createProblem(problem);
      this.state.selection = initialSelection();
      this.state.diagnosis = null;
      this.state.sorting = null;
      this.state.ranks = null;
      await this.refreshRelationViews();
    });
  }

  /** Post one statement; on an incompatible result surface the minimal sets inline. */
  async compose(statement: StatementIn): Promise<void> {
    await this.guard(async () => {
      const result = await this.api.addStatement(this.sessionId, statement);
      this.state.session = await this.api.getSession(this.sessionId);
      if (!result.compatible) {
        this.state.diagnosis = await this.api.diagnose(this.sessionId);
        // relation views are undefined while incompatible; keep the last ones marked stale
        this.state.graph = null;
        this.state.matrix = null;
        this.state.viewVersion = this.state.session.version;
      } else {
        this.state.diagnosis = null;
        await this.refreshRelationViews();
      }
    });
  }

  /** Drop the newest statement and restore the previous rendered graph exactly. */
  async undo(): Promise<void> {
    await this.guard(async () => {
      const current = this.state.session?.version ?? 0;
      if (current === 0) return;
      await this.api.revert(this.sessionId, current - 1);
      this.state.session = await this.api.getSession(this.sessionId);
      this.state.diagnosis = this.state.session.compatible
        ? null
        : await this.api.diagnose(this.sessionId);
      if (this.state.session.compatible) {
        await this.refreshRelationViews();
      } else {
        this.state.graph = null;
        this.state.matrix = null;
        this.state.viewVersion = this.state.session.version;
      }
    });
  }

  async select(update: Partial<RelationSelection>): Promise<void> {
    await this.guard(async () => {
      this.state.selection = { ...this.state.selection, ...update };
      if (this.state.session?.compatible) {
        await this.refreshRelationViews();
      }
    });
  }

  private async refreshRelationViews(): Promise<void> {
    const session = this.state.session;
    if (!session) return;
    const index = indexParam(this.state.selection, session.n);
    const { family, group, outer, inner, coalition } = this.state.selection;
    if (group && coalition.length > 0) {
      this.state.matrix = await this.api.getGroup(session.id, {
        family,
        index,
        outer,
        inner,
        dms: coalition,
      });
      this.state.graph = null; // group relations need not be transitively reducible
    } else {
      this.state.matrix = await this.api.getRelations(session.id, { family, index });
      this.state.graph = await this.api.getHasse(session.id, { family, index });
    }
    this.state.viewVersion = session.version;
  }

  async loadSorting(spec?: SortingSpec): Promise<void> {
    await this.guard(async () => {
      if (spec) {
        this.state.session = await this.api.setSorting(this.sessionId, spec);
      }
      this.state.sorting = await this.api.getSorting(this.sessionId);
    });
  }

  async loadRanks(): Promise<void> {
    await this.guard(async () => {
      const session = this.state.session;
      if (!session) return;
      const index = indexParam(this.state.selection, session.n);
      this.state.ranks = await this.api.getExtremeRanks(session.id, index);
    });
  }

  /** True iff the displayed graph has a direct arc from a's class to b's class. */
  hasArc(a: string, b: string): boolean {
    const graph = this.state.graph;
    if (!graph) return false;
    const src = graph.nodes.findIndex((members) => members.includes(a));
    const dst = graph.nodes.findIndex((members) => members.includes(b));
    if (src < 0 || dst < 0) return false;
    return graph.arcs.some(([from, to]) => from === src && to === dst);
  }

  authors(): string[] {
    const session = this.state.session;
    if (!session) return [];
    const seen = new Set<string>();
    for (const entry of session.statements) seen.add(entry.author ?? "dm");
    return [...seen];
  }
}

export { ApiError };

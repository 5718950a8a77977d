// Application controller: owns the DOM, a service session, and the
// current ViewState. Every displayed row comes from a service
// response; the client computes nothing itself.

import { ApiError, Client, type DiffResult, type QueryResult } from "./api";
import { headerOrder, renderTable } from "./table";
import {
  buildQuery,
  ConstraintError,
  FIELDS,
  fieldMaxima,
  initialView,
  promoteColumn,
  setConstraint,
  setSlot,
  setSummary,
  toggleNegate,
  toggleNotAllowed,
  type Field,
  type ViewState,
} from "./state";

const SUMMARY_FALLBACK: Field[] = ["Proto", "Port"];

export class App {
  view: ViewState = initialView();
  session = "";
  maxima = fieldMaxima([8, 16, 3]);
  private seq = 0;

  constructor(
    readonly root: HTMLElement,
    readonly client: Client,
  ) {
    root.innerHTML = this.skeleton();
    this.wire();
  }

  private skeleton(): string {
    const boxes = FIELDS.map(
      (f) => `
      <label class="constraint">
        <span>${f}</span>
        <input id="c-${f}" placeholder="value or lo-hi" />
        <label class="not"><input type="checkbox" id="n-${f}" />NOT</label>
      </label>`,
    ).join("");
    return `
    <header><h1>Rule-set explorer</h1><span id="status">connecting...</span></header>
    <section class="loaders">
      <div class="loader">
        <h2>old</h2>
        <textarea id="acl-old" rows="6" placeholder="paste an access list"></textarea>
        <input type="file" id="file-old" />
        <button id="load-old">Load old</button>
        <span id="info-old"></span>
      </div>
      <div class="loader">
        <h2>new</h2>
        <textarea id="acl-new" rows="6" placeholder="paste an access list"></textarea>
        <input type="file" id="file-new" />
        <button id="load-new">Load new</button>
        <span id="info-new"></span>
      </div>
    </section>
    <section class="controls">
      <label>slot
        <select id="slot"><option value="old">old</option><option value="new">new</option></select>
      </label>
      <div class="constraints">${boxes}</div>
      <label>summary columns <input id="summary" placeholder="e.g. Proto,Port" /></label>
      <label><input type="checkbox" id="not-allowed" />show rejected packets</label>
      <button id="run">Run query</button>
      <button id="compare">Compare old vs new</button>
    </section>
    <div id="error" hidden></div>
    <div id="result"></div>
    <div id="diff" hidden>
      <div id="banner" class="banner" hidden>rule sets are equivalent</div>
      <div class="panes">
        <div><h3>newly allowed</h3><div id="pane-allowed"></div></div>
        <div><h3>newly denied</h3><div id="pane-denied"></div></div>
      </div>
    </div>`;
  }

  private el<T extends HTMLElement>(id: string): T {
    const node = this.root.querySelector<T>(`#${id}`);
    if (!node) throw new Error(`missing element #${id}`);
    return node;
  }

  private wire(): void {
    this.el<HTMLButtonElement>("load-old").addEventListener("click", () => void this.load("old"));
    this.el<HTMLButtonElement>("load-new").addEventListener("click", () => void this.load("new"));
    this.el<HTMLButtonElement>("run").addEventListener("click", () => void this.runQuery());
    this.el<HTMLButtonElement>("compare").addEventListener("click", () => void this.compare());
    this.el<HTMLSelectElement>("slot").addEventListener("change", (e) => {
      this.view = setSlot(this.view, (e.target as HTMLSelectElement).value as "old" | "new");
    });
    this.el<HTMLInputElement>("not-allowed").addEventListener("change", () => {
      this.view = toggleNotAllowed(this.view);
    });
    for (const f of FIELDS) {
      this.el<HTMLInputElement>(`c-${f}`).addEventListener("input", (e) => {
        this.view = setConstraint(this.view, f, (e.target as HTMLInputElement).value);
      });
      this.el<HTMLInputElement>(`n-${f}`).addEventListener("change", () => {
        this.view = toggleNegate(this.view, f);
      });
    }
    for (const slot of ["old", "new"] as const) {
      this.el<HTMLInputElement>(`file-${slot}`).addEventListener("change", async (e) => {
        const file = (e.target as HTMLInputElement).files?.[0];
        if (file) this.el<HTMLTextAreaElement>(`acl-${slot}`).value = await file.text();
      });
    }
  }

  async init(): Promise<void> {
    const info = await this.client.createSession();
    this.session = info.session;
    this.maxima = fieldMaxima(info.widths);
    this.el("status").textContent = `session ${info.session}, ${info.variables} variables`;
  }

  async load(slot: "old" | "new"): Promise<void> {
    this.clearError();
    const text = this.el<HTMLTextAreaElement>(`acl-${slot}`).value;
    try {
      const info = await this.client.loadRuleset(this.session, slot, text);
      this.el(`info-${slot}`).textContent =
        `${info.rules} rules, ${info.node_count} nodes`;
    } catch (err) {
      this.showError(err);
    }
  }

  // Reads the summary box lazily: it is free-form text until the user
  // actually runs a query.
  private adoptSummaryBox(): void {
    const text = this.el<HTMLInputElement>("summary").value.trim();
    const fields =
      text === "" ? [] : (text.split(/\s*,\s*/).filter((s) => s !== "") as Field[]);
    this.view = setSummary(this.view, fields);
  }

  async runQuery(): Promise<void> {
    this.clearError();
    const seq = ++this.seq;
    let result: QueryResult;
    try {
      this.adoptSummaryBox();
      const req = buildQuery(this.view, this.maxima);
      result = await this.client.query(this.session, req);
    } catch (err) {
      if (seq === this.seq) this.showError(err);
      return;
    }
    if (seq !== this.seq) return; // a later query superseded this one
    this.el("diff").hidden = true;
    const container = this.el("result");
    container.innerHTML = "";
    const table = renderTable(this.root.ownerDocument, result.table, (f) =>
      void this.promote(f as Field),
    );
    container.appendChild(table);
    const note = this.root.ownerDocument.createElement("p");
    note.className = "rowcount";
    note.textContent = `${result.rows} rows in ${result.elapsed_seconds.toFixed(3)}s`;
    container.appendChild(note);
  }

  async promote(field: Field): Promise<void> {
    this.view = promoteColumn(this.view, field);
    if (this.view.summary.includes(field)) {
      this.view = setSummary(this.view, [
        field,
        ...this.view.summary.filter((f) => f !== field),
      ]);
      this.el<HTMLInputElement>("summary").value = this.view.summary.join(",");
    }
    await this.runQuery();
  }

  async compare(): Promise<void> {
    this.clearError();
    const seq = ++this.seq;
    let result: DiffResult;
    try {
      result = await this.client.diff(this.session, [...this.view.order]);
    } catch (err) {
      if (seq === this.seq) this.showError(err);
      return;
    }
    if (seq !== this.seq) return;
    this.el("result").innerHTML = "";
    this.el("diff").hidden = false;
    // the banner is driven by the tables themselves: equivalence is
    // exactly "nothing gained and nothing lost"
    const empty =
      result.now_allowed.rows.length === 0 && result.now_denied.rows.length === 0;
    this.el("banner").hidden = !empty;
    const doc = this.root.ownerDocument;
    const allowed = this.el("pane-allowed");
    allowed.innerHTML = "";
    allowed.appendChild(renderTable(doc, result.now_allowed));
    const denied = this.el("pane-denied");
    denied.innerHTML = "";
    denied.appendChild(renderTable(doc, result.now_denied));
  }

  displayedOrder(): string[] {
    const table = this.el("result").querySelector("table");
    return table ? headerOrder(table as HTMLTableElement) : [];
  }

  private clearError(): void {
    const box = this.el("error");
    box.hidden = true;
    box.innerHTML = "";
  }

  private showError(err: unknown): void {
    const box = this.el("error");
    box.hidden = false;
    box.innerHTML = "";
    const doc = this.root.ownerDocument;
    const msg = doc.createElement("p");
    if (err instanceof ApiError) {
      msg.textContent =
        err.line !== undefined ? `${err.message} (line ${err.line})` : err.message;
      box.appendChild(msg);
      for (const e of err.errors ?? []) {
        const li = doc.createElement("p");
        li.className = "line-error";
        li.textContent = `line ${e.line}: ${e.message}`;
        box.appendChild(li);
      }
      if (err.code === "row_budget") {
        const btn = doc.createElement("button");
        btn.id = "to-summary";
        btn.textContent = `switch to a ${SUMMARY_FALLBACK.join("+")} summary`;
        btn.addEventListener("click", () => {
          this.view = setSummary(this.view, SUMMARY_FALLBACK);
          this.el<HTMLInputElement>("summary").value = SUMMARY_FALLBACK.join(",");
          void this.runQuery();
        });
        box.appendChild(btn);
      }
    } else if (err instanceof ConstraintError) {
      msg.textContent = err.message;
      box.appendChild(msg);
    } else {
      msg.textContent = String(err);
      box.appendChild(msg);
    }
  }
}

// View state and the pure functions that manipulate it. Everything
// here is serialisable and side-effect free; the app layer owns I/O.

import type { QueryRequest } from "./api";

export const FIELDS = [
  "Proto",
  "Port",
  "Src1",
  "Src2",
  "Src3",
  "Src4",
  "Dest1",
  "Dest2",
  "Dest3",
  "Dest4",
] as const;

export type Field = (typeof FIELDS)[number];

export const PROTOCOL_NUMBERS: Record<string, number> = {
  ip: 0,
  icmp: 1,
  udp: 2,
  tcp: 3,
  gre: 4,
};

export interface Constraint {
  text: string;
  negate: boolean;
}

export interface ViewState {
  slot: "old" | "new";
  order: Field[]; // permutation of FIELDS, leftmost first
  constraints: Record<Field, Constraint>;
  summary: Field[]; // non-empty switches the view to summary mode
  notAllowed: boolean;
  budget?: number;
}

export function initialView(): ViewState {
  const constraints = {} as Record<Field, Constraint>;
  for (const f of FIELDS) constraints[f] = { text: "", negate: false };
  return {
    slot: "old",
    order: [...FIELDS],
    constraints,
    summary: [],
    notAllowed: false,
  };
}

// Click-to-promote: the clicked field becomes the leftmost column and
// the relative order of the others is preserved.
export function promoteColumn(view: ViewState, field: Field): ViewState {
  if (!view.order.includes(field)) throw new Error(`unknown field ${field}`);
  return { ...view, order: [field, ...view.order.filter((f) => f !== field)] };
}

export function setConstraint(view: ViewState, field: Field, text: string): ViewState {
  const constraints = { ...view.constraints, [field]: { ...view.constraints[field], text } };
  return { ...view, constraints };
}

export function toggleNegate(view: ViewState, field: Field): ViewState {
  const old = view.constraints[field];
  const constraints = { ...view.constraints, [field]: { ...old, negate: !old.negate } };
  return { ...view, constraints };
}

export function setSummary(view: ViewState, fields: Field[]): ViewState {
  const seen = new Set<Field>();
  for (const f of fields) {
    if (!FIELDS.includes(f)) throw new ConstraintError(f, "unknown field");
    if (seen.has(f)) throw new ConstraintError(f, "repeated summary field");
    seen.add(f);
  }
  return { ...view, summary: [...fields] };
}

export function setSlot(view: ViewState, slot: "old" | "new"): ViewState {
  return { ...view, slot };
}

export function toggleNotAllowed(view: ViewState): ViewState {
  return { ...view, notAllowed: !view.notAllowed };
}

export class ConstraintError extends Error {
  constructor(
    readonly field: string,
    message: string,
  ) {
    super(`${field}: ${message}`);
    this.name = "ConstraintError";
  }
}

// Per-field inclusive maxima derived from the session's bit widths
// (segment, port, protocol). Constraint inputs are checked against
// these before anything is sent to the service.
export function fieldMaxima(widths: [number, number, number]): Record<Field, number> {
  const [seg, port, proto] = widths;
  const top = (w: number) => 2 ** w - 1;
  const m = {} as Record<Field, number>;
  for (const f of FIELDS) {
    m[f] = f === "Proto" ? top(proto) : f === "Port" ? top(port) : top(seg);
  }
  return m;
}

function parseValue(field: Field, token: string, max: number): number {
  if (field === "Proto" && token in PROTOCOL_NUMBERS) {
    const v = PROTOCOL_NUMBERS[token]!;
    if (v > max) throw new ConstraintError(field, `${token} (${v}) exceeds ${max}`);
    return v;
  }
  if (!/^\d+$/.test(token)) throw new ConstraintError(field, `not a value: '${token}'`);
  const v = Number(token);
  if (v > max) throw new ConstraintError(field, `${v} exceeds ${max}`);
  return v;
}

// One constraint box holds either a single value ("53", "udp") or an
// inclusive range ("80-90"). Returns the service condition atom, or
// null for a blank box.
export function constraintAtom(field: Field, c: Constraint, max: number): string | null {
  const text = c.text.trim();
  if (text === "") return null;
  const range = text.match(/^(\S+?)\s*(?:--?|\.\.)\s*(\S+)$/);
  let atom: string;
  if (range) {
    const lo = parseValue(field, range[1]!, max);
    const hi = parseValue(field, range[2]!, max);
    if (lo > hi) throw new ConstraintError(field, `empty range ${lo}..${hi}`);
    atom = `${field} range ${lo} ${hi}`;
  } else {
    // pass protocol names through so the request stays readable
    if (field === "Proto" && text in PROTOCOL_NUMBERS) {
      parseValue(field, text, max);
      atom = `${field} <- ${text}`;
    } else {
      atom = `${field} <- ${parseValue(field, text, max)}`;
    }
  }
  return c.negate ? `NOT(${atom})` : atom;
}

export function buildWhere(view: ViewState, maxima: Record<Field, number>): string {
  const atoms: string[] = [];
  for (const f of FIELDS) {
    const atom = constraintAtom(f, view.constraints[f], maxima[f]);
    if (atom !== null) atoms.push(atom);
  }
  return atoms.join(", ");
}

// The request the current view stands for. Summary mode sends the
// chosen columns; otherwise the full display order goes out, so the
// service's column order always matches what the table shows.
export function buildQuery(view: ViewState, maxima: Record<Field, number>): QueryRequest {
  const req: QueryRequest = { slot: view.slot };
  const where = buildWhere(view, maxima);
  if (where !== "") req.where = where;
  if (view.summary.length > 0) req.summary = [...view.summary];
  else req.order = [...view.order];
  if (view.notAllowed) req.not_allowed = true;
  if (view.budget !== undefined) req.budget = view.budget;
  return req;
}

export function serializeView(view: ViewState): string {
  return JSON.stringify(view);
}

export function restoreView(text: string): ViewState {
  const raw = JSON.parse(text) as ViewState;
  const view = initialView();
  view.slot = raw.slot === "new" ? "new" : "old";
  if ([...raw.order].sort().join() !== [...FIELDS].sort().join()) {
    throw new Error("order is not a permutation of the field list");
  }
  view.order = raw.order;
  for (const f of FIELDS) {
    const c = raw.constraints[f];
    if (c) view.constraints[f] = { text: String(c.text), negate: !!c.negate };
  }
  view.summary = raw.summary ?? [];
  view.notAllowed = !!raw.notAllowed;
  view.budget = raw.budget;
  return view;
}

// Render the service's structured rows. Cells are displayed exactly
// as flagged: an elided cell is blank because it repeats the row
// above, and that decision is the service's, never recomputed here.

import type { Cell, TableData } from "./api";

export function cellText(cell: Cell): string {
  if (cell.elide) return "";
  if (cell.lo === cell.hi) return String(cell.lo);
  return `${cell.lo}--${cell.hi}`;
}

export function renderTable(
  doc: Document,
  data: TableData,
  onHeaderClick?: (field: string) => void,
): HTMLTableElement {
  const table = doc.createElement("table");
  table.className = "result";

  const thead = doc.createElement("thead");
  const headRow = doc.createElement("tr");
  for (const name of data.columns) {
    const th = doc.createElement("th");
    th.textContent = name;
    th.dataset.field = name;
    if (onHeaderClick) {
      th.classList.add("clickable");
      th.title = "click to promote this column";
      th.addEventListener("click", () => onHeaderClick(name));
    }
    headRow.appendChild(th);
  }
  thead.appendChild(headRow);
  table.appendChild(thead);

  const tbody = doc.createElement("tbody");
  for (const row of data.rows) {
    const tr = doc.createElement("tr");
    for (const cell of row) {
      const td = doc.createElement("td");
      td.textContent = cellText(cell);
      if (cell.elide) td.classList.add("elided");
      tr.appendChild(td);
    }
    tbody.appendChild(tr);
  }
  table.appendChild(tbody);
  return table;
}

// The column order a rendered table actually displays.
export function headerOrder(table: HTMLTableElement): string[] {
  return Array.from(table.querySelectorAll("thead th")).map(
    (th) => (th as HTMLElement).dataset.field ?? th.textContent ?? "",
  );
}

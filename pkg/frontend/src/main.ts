/** Browser entry point: renders the controller's view into the page and
 * forwards clicks back to it.  The page is rebuilt from the view model on
 * every change; there is no incremental DOM state to drift. */

import { HttpApi } from "./api.js";
import { ExplorerApp, type AppView } from "./app.js";
import type { Segment } from "./mathtext.js";
import { QUIVER_SIZE, type MatrixPanelView, type QuiverView } from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const DEFAULT_MATRIX = '{"n": 2, "B": [[0, 1], [-1, 0]]}';
const DEFAULT_BASE = "http://127.0.0.1:8000";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderSegments(target: HTMLElement, segments: Segment[]): void {
  for (const s of segments) {
    if (s.kind === "txt") {
      target.appendChild(document.createTextNode(s.text));
    } else {
      const node = document.createElement(s.kind);
      node.textContent = s.text;
      target.appendChild(node);
    }
  }
}

function renderQuiver(q: QuiverView, onNode: (k: number) => void, disabled: boolean): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${QUIVER_SIZE} ${QUIVER_SIZE}`);
  svg.setAttribute("class", "quiver");
  const defs = document.createElementNS(SVG_NS, "defs");
  defs.innerHTML =
    '<marker id="arrow" viewBox="0 0 10 10" refX="24" refY="5" ' +
    'markerWidth="7" markerHeight="7" orient="auto-start-reverse">' +
    '<path d="M 0 0 L 10 5 L 0 10 z" fill="#445"/></marker>';
  svg.appendChild(defs);
  const at = (id: number) => q.nodes[id - 1]!;
  for (const e of q.edges) {
    const a = at(e.from);
    const b = at(e.to);
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    line.setAttribute("class", "edge");
    line.setAttribute("marker-end", "url(#arrow)");
    svg.appendChild(line);
    if (e.label) {
      const t = document.createElementNS(SVG_NS, "text");
      t.setAttribute("x", String((a.x + b.x) / 2));
      t.setAttribute("y", String((a.y + b.y) / 2 - 8));
      t.setAttribute("class", "edge-label");
      t.textContent = e.label;
      svg.appendChild(t);
    }
  }
  for (const n of q.nodes) {
    const g = document.createElementNS(SVG_NS, "g");
    g.setAttribute("class", disabled ? "node disabled" : "node");
    const c = document.createElementNS(SVG_NS, "circle");
    c.setAttribute("cx", String(n.x));
    c.setAttribute("cy", String(n.y));
    c.setAttribute("r", "18");
    const t = document.createElementNS(SVG_NS, "text");
    t.setAttribute("x", String(n.x));
    t.setAttribute("y", String(n.y + 5));
    t.textContent = n.label;
    g.appendChild(c);
    g.appendChild(t);
    if (!disabled) g.addEventListener("click", () => onNode(n.id));
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `mutate in direction ${n.label}`;
    g.appendChild(title);
    svg.appendChild(g);
  }
  return svg;
}

function renderMatrix(panel: MatrixPanelView): HTMLElement {
  const box = el("div", "matrix-panel");
  box.appendChild(el("h3", undefined, panel.name));
  const table = el("table", "matrix");
  panel.rows.forEach((row) => {
    const tr = el("tr");
    row.forEach((cell, j) => {
      const td = el("td", `sign-${cell.sign}`, cell.text);
      if (panel.columnFlags) td.classList.add(`col-${panel.columnFlags[j]}`);
      tr.appendChild(td);
    });
    table.appendChild(tr);
  });
  box.appendChild(table);
  return box;
}

interface Ctx {
  app: ExplorerApp;
}

function render(root: HTMLElement, ctx: Ctx): void {
  const app = ctx.app;
  const view: AppView = app.view;
  root.textContent = "";

  // repaint right away so the pending state disables inputs during the
  // request, then again when the service answers
  const dispatch = (action: Promise<void>) => {
    render(root, ctx);
    void action.then(() => render(root, ctx));
  };

  const toolbar = el("div", "toolbar");
  const base = el("input") as HTMLInputElement;
  base.value = (root.dataset.base ??= DEFAULT_BASE);
  base.className = "base-url";
  const matrix = el("input") as HTMLInputElement;
  matrix.value = root.dataset.matrix ??= DEFAULT_MATRIX;
  matrix.className = "matrix-input";
  const start = el("button", undefined, "start session") as HTMLButtonElement;
  start.disabled = view.pending;
  start.addEventListener("click", () => {
    root.dataset.base = base.value;
    root.dataset.matrix = matrix.value;
    ctx.app = new ExplorerApp(new HttpApi(base.value));
    dispatch(ctx.app.start(matrix.value));
  });
  base.addEventListener("change", () => (root.dataset.base = base.value));
  toolbar.append(el("label", undefined, "service"), base,
                 el("label", undefined, "matrix"), matrix, start);
  root.appendChild(toolbar);

  if (view.error) root.appendChild(el("div", "error", view.error));

  const strip = el("div", "history");
  strip.appendChild(el("span", "chip origin", "t0"));
  view.history.forEach((h) => {
    const chip = el("span", "chip", h.label);
    chip.title = "C after this step:\n" + h.tooltipC.map((r) => r.join("  ")).join("\n");
    strip.appendChild(chip);
  });
  const undo = el("button", undefined, "undo") as HTMLButtonElement;
  undo.disabled = !view.canUndo;
  undo.addEventListener("click", () => dispatch(app.undo()));
  const redo = el("button", undefined, "redo") as HTMLButtonElement;
  redo.disabled = !view.canRedo;
  redo.addEventListener("click", () => dispatch(app.redo()));
  strip.append(undo, redo);
  if (view.pending) strip.appendChild(el("span", "pending", "working..."));
  root.appendChild(strip);

  if (!view.seed) return;
  const seed = view.seed;

  const grid = el("div", "grid");
  const quiverBox = el("div", "panel");
  quiverBox.appendChild(el("h3", undefined, "quiver (click a node to mutate)"));
  quiverBox.appendChild(
    renderQuiver(seed.quiver, (k) => dispatch(app.mutate(k)), view.pending),
  );
  grid.appendChild(quiverBox);

  const matBox = el("div", "panel matrices");
  seed.matrices.forEach((m) => matBox.appendChild(renderMatrix(m)));
  const facts = el("div", "facts");
  facts.appendChild(el("div", undefined,
    seed.symmetrizer === null ? "symmetrizer: none" : `symmetrizer: ${seed.symmetrizer}`));
  if (seed.dualityOk !== null) {
    facts.appendChild(el("div", undefined, `duality: ${seed.dualityOk ? "ok" : "VIOLATED"}`));
  }
  facts.appendChild(el("div", undefined, `fingerprint: ${seed.fingerprint}`));
  matBox.appendChild(facts);
  grid.appendChild(matBox);

  const varBox = el("div", "panel variables");
  varBox.appendChild(el("h3", undefined, "cluster variables"));
  seed.variables.forEach((v, i) => {
    const row = el("div", "formula");
    renderSegments(row, [{ kind: "txt", text: "x" }, { kind: "sub", text: String(i + 1) },
                         { kind: "txt", text: " = " }]);
    renderSegments(row, v.segments);
    varBox.appendChild(row);
  });
  varBox.appendChild(el("h3", undefined, "F-polynomials"));
  seed.fPolynomials.forEach((f, i) => {
    const row = el("div", "formula");
    renderSegments(row, [{ kind: "txt", text: "F" }, { kind: "sub", text: String(i + 1) },
                         { kind: "txt", text: " = " }]);
    renderSegments(row, f.segments);
    varBox.appendChild(row);
  });
  varBox.appendChild(el("h3", undefined, "g-vectors"));
  seed.gVectors.forEach((g) => {
    varBox.appendChild(el("div", "formula", `${g.name} = ${g.text}`));
  });
  grid.appendChild(varBox);
  root.appendChild(grid);
}

function boot(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app container");
  const ctx: Ctx = {
    app: new ExplorerApp(new HttpApi(root.dataset.base ?? DEFAULT_BASE)),
  };
  render(root, ctx);
}

boot();

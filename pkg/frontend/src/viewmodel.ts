/** Pure translation of a service payload into a renderable view.  Every
 * displayed quantity is the payload value formatted with String() or
 * sliced out of the payload's canonical text; the only operations applied
 * to numbers here are comparisons for sign styling.  In particular the
 * per-column sign-coherence verdicts are taken from the payload, not
 * recomputed. */

import { layoutQuiver, type Point } from "./layout.js";
import { segmentsOf, type Segment } from "./mathtext.js";
import type { SeedPayload } from "./model.js";

export type Sign = "pos" | "neg" | "zero";

export interface MatrixCellView {
  text: string;
  sign: Sign;
}

export type ColumnFlag = "green" | "red" | "mixed";

export interface MatrixPanelView {
  name: string;
  rows: MatrixCellView[][];
  /** present only on the C panel: sign-coherent columns are flagged
   * all-green (no negative entry) or all-red (no positive entry) */
  columnFlags: ColumnFlag[] | null;
}

export interface QuiverNodeView {
  id: number;
  label: string;
  x: number;
  y: number;
}

export interface QuiverEdgeView {
  from: number;
  to: number;
  /** weight pair label like "(1,2)"; empty for a plain (1,1) arrow */
  label: string;
}

export interface QuiverView {
  nodes: QuiverNodeView[];
  edges: QuiverEdgeView[];
}

export interface FormulaView {
  name: string;
  segments: Segment[];
}

export interface SeedView {
  quiver: QuiverView;
  matrices: MatrixPanelView[];
  variables: FormulaView[];
  fPolynomials: FormulaView[];
  gVectors: { name: string; text: string }[];
  signCoherent: boolean[];
  symmetrizer: string | null;
  dualityOk: boolean | null;
  fingerprint: string;
}

export const QUIVER_SIZE = 420;

function signOf(v: number): Sign {
  if (v > 0) return "pos";
  if (v < 0) return "neg";
  return "zero";
}

function cells(rows: number[][]): MatrixCellView[][] {
  return rows.map((row) => row.map((v) => ({ text: String(v), sign: signOf(v) })));
}

function columnFlags(C: number[][], coherent: boolean[]): ColumnFlag[] {
  const n = C[0]?.length ?? 0;
  const flags: ColumnFlag[] = [];
  for (let j = 0; j < n; j++) {
    if (!coherent[j]) {
      flags.push("mixed");
      continue;
    }
    let hasNeg = false;
    for (const row of C) if ((row[j] ?? 0) < 0) hasNeg = true;
    flags.push(hasNeg ? "red" : "green");
  }
  return flags;
}

function unsignedText(v: number): string {
  return String(v).replace(/^-/, "");
}

function quiverOf(B: number[][]): QuiverView {
  const pos: Point[] = layoutQuiver(B, QUIVER_SIZE, QUIVER_SIZE);
  const nodes: QuiverNodeView[] = B.map((_, i) => ({
    id: i + 1,
    label: String(i + 1),
    x: pos[i]!.x,
    y: pos[i]!.y,
  }));
  const edges: QuiverEdgeView[] = [];
  for (let i = 0; i < B.length; i++) {
    for (let j = 0; j < B.length; j++) {
      const out = B[i]![j]!;
      if (out > 0) {
        const back = B[j]![i]!;
        const plain = out === 1 && back === -1;
        edges.push({
          from: i + 1,
          to: j + 1,
          label: plain ? "" : `(${String(out)},${unsignedText(back)})`,
        });
      }
    }
  }
  return { nodes, edges };
}

function formulas(prefix: string, texts: string[]): FormulaView[] {
  return texts.map((t, i) => ({ name: `${prefix}${i + 1}`, segments: segmentsOf(t) }));
}

export function buildSeedView(p: SeedPayload): SeedView {
  return {
    quiver: quiverOf(p.B),
    matrices: [
      { name: "B~", rows: cells(p.Bt), columnFlags: null },
      { name: "C", rows: cells(p.C), columnFlags: columnFlags(p.C, p.sign_coherent) },
      { name: "G", rows: cells(p.G), columnFlags: null },
    ],
    variables: formulas("x", p.variables),
    fPolynomials: formulas("F", p.f_polynomials),
    gVectors: p.g_vectors.map((g, i) => ({
      name: `g${i + 1}`,
      text: `(${g.map(String).join(", ")})`,
    })),
    signCoherent: [...p.sign_coherent],
    symmetrizer: p.symmetrizer === null ? null : `diag(${p.symmetrizer.map(String).join(", ")})`,
    dualityOk: p.duality_ok,
    fingerprint: p.fingerprint,
  };
}

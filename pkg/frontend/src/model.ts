/** Wire types for the seed-mutation HTTP service.  The client never
 * computes with these values; it only formats and displays them. */

export interface SeedPayload {
  v: number;
  n: number;
  /** cluster variables in canonical Laurent text form */
  variables: string[];
  f_polynomials: string[];
  /** one g-vector per cluster variable (columns of G) */
  g_vectors: number[][];
  /** top square block of the extended exchange matrix */
  B: number[][];
  /** full extended exchange matrix (B stacked over C) */
  Bt: number[][];
  C: number[][];
  G: number[][];
  /** per-column sign-coherence verdicts, computed by the service */
  sign_coherent: boolean[];
  symmetrizer: number[] | null;
  duality_ok: boolean | null;
  fingerprint: string;
}

export interface SessionPayload extends SeedPayload {
  id: string;
}

export interface HistoryStep {
  k: number;
  fingerprint: string;
}

export interface HistoryResponse {
  v: number;
  id: string;
  origin: { n: number; B: number[][] };
  steps: HistoryStep[];
  current_fingerprint: string;
}

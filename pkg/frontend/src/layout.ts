/** Force-directed quiver layout, deterministically seeded from the matrix
 * bytes: the same exchange matrix always produces the same picture, so
 * screenshots and rendered-view tests are reproducible.  Coordinates are
 * geometry only; no displayed quantity comes from here. */

export interface Point {
  x: number;
  y: number;
}

function fnv1a(text: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ITERATIONS = 200;

export function layoutQuiver(B: number[][], width: number, height: number): Point[] {
  const n = B.length;
  if (n === 0) return [];
  const rand = mulberry32(fnv1a(JSON.stringify(B)));
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 3;
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n + (rand() - 0.5) * 0.3;
    const r = radius * (0.8 + 0.4 * rand());
    pts.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  if (n === 1) return [{ x: cx, y: cy }];

  const spring = radius;
  for (let step = 0; step < ITERATIONS; step++) {
    const temp = (radius / 8) * (1 - step / ITERATIONS);
    const disp: Point[] = pts.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = 0; j < n; j++) {
        if (i === j) continue;
        const dx = pts[i]!.x - pts[j]!.x;
        const dy = pts[i]!.y - pts[j]!.y;
        const d = Math.max(Math.hypot(dx, dy), 1e-6);
        const repel = (spring * spring) / d;
        disp[i]!.x += (dx / d) * repel;
        disp[i]!.y += (dy / d) * repel;
        if (B[i]![j] !== 0 || B[j]![i] !== 0) {
          const attract = (d * d) / spring;
          disp[i]!.x -= (dx / d) * attract;
          disp[i]!.y -= (dy / d) * attract;
        }
      }
      disp[i]!.x += (cx - pts[i]!.x) * 0.05;
      disp[i]!.y += (cy - pts[i]!.y) * 0.05;
    }
    for (let i = 0; i < n; i++) {
      const d = Math.max(Math.hypot(disp[i]!.x, disp[i]!.y), 1e-6);
      const scale = Math.min(d, temp) / d;
      pts[i]!.x += disp[i]!.x * scale;
      pts[i]!.y += disp[i]!.y * scale;
    }
  }

  const margin = Math.min(width, height) / 10;
  const xs = pts.map((p) => p.x);
  const ys = pts.map((p) => p.y);
  const lo = { x: Math.min(...xs), y: Math.min(...ys) };
  const hi = { x: Math.max(...xs), y: Math.max(...ys) };
  const span = Math.max(hi.x - lo.x, hi.y - lo.y, 1e-6);
  const fit = Math.min(width - 2 * margin, height - 2 * margin) / span;
  const scale = Math.min(fit, 1);
  return pts.map((p) => ({
    x: round2(cx + (p.x - (lo.x + hi.x) / 2) * scale),
    y: round2(cy + (p.y - (lo.y + hi.y) / 2) * scale),
  }));
}

function round2(v: number): number {
  return Math.round(v * 100) / 100;
}

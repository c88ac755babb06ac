/** Layout segments for the canonical Laurent text form, e.g.
 * "x2^-1*y1*y2 + x1^-1" or "-2*x2^2 + x1 + 1".  Grammar: terms joined by
 * " + " / " - " (a bare "-" may prefix the first term), factors joined by
 * "*", each factor an integer magnitude or x<i>/y<i> with an optional
 * ^<int> exponent.  Numbers are copied straight out of the input string,
 * never re-parsed, so the display is verbatim. */

export type SegmentKind = "txt" | "sub" | "sup";

export interface Segment {
  kind: SegmentKind;
  text: string;
}

const TOKEN = /( [+-] )|(\*)|(\d+)|([xy])(\d+)(?:\^(-?\d+))?/y;

const MIDDLE_DOT = "·";

export function segmentsOf(canonical: string): Segment[] {
  const out: Segment[] = [];
  let pos = 0;
  if (canonical.startsWith("-")) {
    out.push({ kind: "txt", text: "-" });
    pos = 1;
  }
  while (pos < canonical.length) {
    TOKEN.lastIndex = pos;
    const m = TOKEN.exec(canonical);
    if (!m || m.index !== pos) {
      throw new Error(`not canonical Laurent text at offset ${pos}: ${JSON.stringify(canonical)}`);
    }
    const [whole, sep, star, int, letter, index, exponent] = m;
    if (sep !== undefined) {
      out.push({ kind: "txt", text: sep });
    } else if (star !== undefined) {
      out.push({ kind: "txt", text: MIDDLE_DOT });
    } else if (int !== undefined) {
      out.push({ kind: "txt", text: int });
    } else {
      out.push({ kind: "txt", text: letter! });
      out.push({ kind: "sub", text: index! });
      if (exponent !== undefined) out.push({ kind: "sup", text: exponent });
    }
    pos += whole.length;
  }
  return mergeText(out);
}

function mergeText(segments: Segment[]): Segment[] {
  const out: Segment[] = [];
  for (const s of segments) {
    const last = out[out.length - 1];
    if (last && last.kind === "txt" && s.kind === "txt") {
      last.text += s.text;
    } else {
      out.push({ ...s });
    }
  }
  return out;
}

/** Inverse of segmentsOf, for round-trip tests. */
export function canonicalOf(segments: Segment[]): string {
  return segments
    .map((s) => {
      if (s.kind === "sub") return s.text;
      if (s.kind === "sup") return `^${s.text}`;
      return s.text.replaceAll(MIDDLE_DOT, "*");
    })
    .join("");
}

/**
 * Deterministic force-directed layout. The seed is derived from the vertex
 * names, so the same quiver always lands in the same positions and
 * screenshots are reproducible.
 */

import type { QuiverJson } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

function hashString(s: string): number {
  let h = 2166136261;
  for (let i = 0; i < s.length; i++) {
    h ^= s.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

/** mulberry32: tiny deterministic PRNG, good enough for jitter. */
function seededRandom(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function layoutQuiver(quiver: QuiverJson, iterations = 120): Map<string, Point> {
  const names = [...quiver.vertices];
  const n = names.length;
  const pos = new Map<string, Point>();
  if (n === 0) return pos;
  const rand = seededRandom(hashString(names.slice().sort().join("|")));

  names.forEach((v, i) => {
    const angle = (2 * Math.PI * i) / n;
    pos.set(v, {
      x: Math.cos(angle) + 0.05 * (rand() - 0.5),
      y: Math.sin(angle) + 0.05 * (rand() - 0.5),
    });
  });

  const edges: Array<[string, string]> = quiver.arrows
    .filter((a) => a.src !== a.tgt)
    .map((a) => [a.src, a.tgt]);

  const springLength = 0.9;
  for (let step = 0; step < iterations; step++) {
    const force = new Map<string, Point>(names.map((v) => [v, { x: 0, y: 0 }]));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const a = pos.get(names[i])!;
        const b = pos.get(names[j])!;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-6);
        const f = 0.08 / d2;
        const fa = force.get(names[i])!;
        const fb = force.get(names[j])!;
        fa.x += f * dx;
        fa.y += f * dy;
        fb.x -= f * dx;
        fb.y -= f * dy;
      }
    }
    for (const [s, t] of edges) {
      const a = pos.get(s)!;
      const b = pos.get(t)!;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.hypot(dx, dy), 1e-6);
      const f = 0.04 * (d - springLength);
      const fa = force.get(s)!;
      const fb = force.get(t)!;
      fa.x += (f * dx) / d;
      fa.y += (f * dy) / d;
      fb.x -= (f * dx) / d;
      fb.y -= (f * dy) / d;
    }
    const damp = 1 - step / iterations;
    for (const v of names) {
      const p = pos.get(v)!;
      const f = force.get(v)!;
      p.x += f.x * damp;
      p.y += f.y * damp;
    }
  }

  // normalize into the unit box, preserving aspect ratio
  let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
  for (const p of pos.values()) {
    minX = Math.min(minX, p.x);
    maxX = Math.max(maxX, p.x);
    minY = Math.min(minY, p.y);
    maxY = Math.max(maxY, p.y);
  }
  const span = Math.max(maxX - minX, maxY - minY, 1e-6);
  for (const p of pos.values()) {
    p.x = (p.x - minX) / span;
    p.y = (p.y - minY) / span;
  }
  return pos;
}

import { describe, expect, it } from "vitest";

import type { QuiverJson, SessionState } from "../src/api.js";
import { layoutQuiver } from "../src/layout.js";
import { bundleArrows } from "../src/render.js";
import { badgeText, validateBuilderParams } from "../src/state.js";

const kronecker: QuiverJson = {
  vertices: ["1", "2"],
  arrows: [
    { id: "u", src: "1", tgt: "2" },
    { id: "v", src: "1", tgt: "2" },
  ],
};

describe("layout", () => {
  it("is deterministic for identical input", () => {
    const a = layoutQuiver(kronecker);
    const b = layoutQuiver(kronecker);
    expect([...a.entries()]).toEqual([...b.entries()]);
  });

  it("places every vertex inside the unit box", () => {
    const quiver: QuiverJson = {
      vertices: ["1", "2", "3", "4", "5"],
      arrows: [
        { id: "a", src: "1", tgt: "2" },
        { id: "b", src: "2", tgt: "3" },
        { id: "c", src: "3", tgt: "4" },
        { id: "d", src: "4", tgt: "5" },
      ],
    };
    for (const p of layoutQuiver(quiver).values()) {
      expect(p.x).toBeGreaterThanOrEqual(-1e-9);
      expect(p.x).toBeLessThanOrEqual(1 + 1e-9);
      expect(p.y).toBeGreaterThanOrEqual(-1e-9);
      expect(p.y).toBeLessThanOrEqual(1 + 1e-9);
    }
  });
});

describe("arrow bundling", () => {
  it("groups parallel arrows by ordered pair", () => {
    const bundles = bundleArrows(kronecker);
    expect(bundles).toHaveLength(1);
    expect(bundles[0]).toMatchObject({ src: "1", tgt: "2", count: 2 });
  });

  it("keeps opposite directions separate", () => {
    const q: QuiverJson = {
      vertices: ["1", "2"],
      arrows: [
        { id: "a", src: "1", tgt: "2" },
        { id: "b", src: "2", tgt: "1" },
      ],
    };
    expect(bundleArrows(q)).toHaveLength(2);
  });
});

describe("badge text", () => {
  const base = {
    id: "x", qp: { quiver: { vertices: [], arrows: [] }, potential: { cycles: [] } },
    truncation: 16, layout: {}, history: [], log: [], undo_depth: 0,
  };
  it("prefers acyclic over 2-acyclic", () => {
    expect(badgeText({ ...base, two_acyclic: true, acyclic: true } as SessionState)).toBe("acyclic");
    expect(badgeText({ ...base, two_acyclic: true, acyclic: false } as SessionState)).toBe("2-acyclic");
    expect(badgeText({ ...base, two_acyclic: false, acyclic: false } as SessionState)).toBe("not 2-acyclic");
    expect(badgeText(null)).toBe("no session");
  });
});

describe("builder validation", () => {
  it("accepts five-vertex with no params", () => {
    expect(validateBuilderParams("five-vertex", {})).toEqual({ ok: true, params: {} });
  });
  it("rejects an empty weight list for squid", () => {
    const out = validateBuilderParams("squid", { weights: " " });
    expect(out.ok).toBe(false);
  });
  it("rejects a ct weight list of the wrong length", () => {
    expect(validateBuilderParams("ct", { weights: "2,3" }).ok).toBe(false);
    expect(validateBuilderParams("ct", { weights: "2,3,4" }).ok).toBe(true);
  });
  it("parses weights into integers", () => {
    const out = validateBuilderParams("squid", { weights: "2, 3, 4" });
    expect(out).toEqual({ ok: true, params: { weights: [2, 3, 4] } });
  });
});

/**
 * Browser wiring: builder form, mode toggle, SVG canvas, panels.
 * The API base defaults to the same host on port 8420 and can be
 * overridden with ?api=http://host:port.
 */

import { Client } from "./api.js";
import { Explorer, validateBuilderParams, ViewState } from "./state.js";
import { renderPanels, renderQuiver } from "./render.js";

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  if (override) return override.replace(/\/$/, "");
  return `http://${window.location.hostname || "127.0.0.1"}:8420`;
}

export function boot(root: HTMLElement, base: string = apiBase()): Explorer {
  const client = new Client(base);
  const svg = root.querySelector<SVGSVGElement>("#canvas")!;

  const explorer = new Explorer(client, (view: ViewState) => {
    if (view.session) {
      renderQuiver(svg, view.session, (v) => void explorer.clickVertex(v));
    }
    renderPanels(root, view);
  });

  const form = root.querySelector<HTMLFormElement>("#builder-form")!;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const kind = (root.querySelector<HTMLSelectElement>("#builder-kind")!).value;
    const weights = (root.querySelector<HTMLInputElement>("#builder-weights")!).value;
    const lambda = (root.querySelector<HTMLInputElement>("#builder-lambda")!).value;
    const checked = validateBuilderParams(kind, { weights, lambda });
    const error = root.querySelector<HTMLElement>("#error")!;
    if (!checked.ok) {
      // invalid input never reaches the server
      error.textContent = checked.message;
      error.style.display = "block";
      return;
    }
    error.style.display = "none";
    void explorer.loadBuilder(kind, checked.params);
  });

  root.querySelector<HTMLButtonElement>("#undo")!.addEventListener("click", () => {
    void explorer.undo();
  });

  root.querySelector<HTMLButtonElement>("#show-potential")!.addEventListener("click", () => {
    const session = explorer.state.session;
    if (!session) return;
    void client.getSession(session.id, true).then((verbose) => {
      root.querySelector<HTMLElement>("#potential")!.textContent =
        verbose.potential_text ?? "";
    });
  });

  for (const radio of root.querySelectorAll<HTMLInputElement>("input[name=mode]")) {
    radio.addEventListener("change", () => {
      if (radio.checked) explorer.setMode(radio.value as "quiver" | "qp");
    });
  }

  return explorer;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot(document.getElementById("app")!);
}

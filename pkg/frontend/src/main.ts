// DOM wiring.  All behavior lives in the controllers; this file only binds
// them to elements in index.html.

import { AnalysisPanelController } from "./analysisPanel.js";
import { ApiClient } from "./api.js";
import { KeyboardController } from "./keyboard.js";
import { ReviewQueueController } from "./queue.js";

const api = new ApiClient("", (url, init) => fetch(url, init));

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

async function setupKeyboard(panel: AnalysisPanelController): Promise<void> {
  const keyboard = new KeyboardController(api);
  await keyboard.load();
  const grid = el<HTMLDivElement>("keyboard");
  const output = el<HTMLDivElement>("typed-text");
  const analyses = el<HTMLPreElement>("analyses");

  const refresh = async () => {
    output.textContent = keyboard.text();
    await panel.analyze(keyboard.text());
    analyses.textContent = panel.renderedLines().join("\n");
  };

  for (const key of keyboard.layout()) {
    const btn = document.createElement("button");
    btn.textContent = `${key.urdu}\n${key.roman}`;
    btn.title = key.phonetic;
    btn.className = key.diacritic ? "key diacritic" : "key";
    btn.addEventListener("click", () => {
      keyboard.press(key.roman);
      void refresh();
    });
    grid.appendChild(btn);
  }
  el<HTMLButtonElement>("key-space").addEventListener("click", () => {
    keyboard.space();
    void refresh();
  });
  el<HTMLButtonElement>("key-backspace").addEventListener("click", () => {
    keyboard.backspace();
    void refresh();
  });
}

async function setupQueue(): Promise<void> {
  const listInput = el<HTMLInputElement>("list-id");
  const status = el<HTMLDivElement>("queue-status");
  const card = el<HTMLDivElement>("candidate-card");
  let queue: ReviewQueueController | null = null;

  const render = () => {
    if (queue === null) {
      return;
    }
    const item = queue.current();
    const t = queue.tally();
    status.textContent =
      `pending ${t.pending} / accepted ${t.accepted} / rejected ${t.rejected}`;
    card.textContent = item === null
      ? "no pending candidates"
      : `${item.paradigm}  ${item.forms.join(" ")}  (freq ${item.frequency})`;
  };

  el<HTMLButtonElement>("load-list").addEventListener("click", async () => {
    queue = new ReviewQueueController(api, listInput.value.trim());
    await queue.refresh();
    render();
  });

  document.addEventListener("keydown", async (ev) => {
    if (queue === null || ev.target instanceof HTMLInputElement) {
      return;
    }
    const handled = await queue.handleKey(ev.key, () => {
      const item = queue!.current();
      const edited = window.prompt("edited forms (space separated)",
        item === null ? "" : item.forms.join(" "));
      return edited === null ? null : edited.trim().split(/\s+/);
    });
    if (handled) {
      render();
    }
  });
}

async function start(): Promise<void> {
  const panel = new AnalysisPanelController(api);
  await setupKeyboard(panel);
  await setupQueue();
}

void start();

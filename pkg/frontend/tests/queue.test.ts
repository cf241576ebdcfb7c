import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ReviewQueueController } from "../src/queue.js";
import { FakeCandidate, FakeServer } from "./fakeServer.js";

function tenCandidates(): FakeCandidate[] {
  const out: FakeCandidate[] = [];
  for (let i = 0; i < 10; i++) {
    const stem = `stem${i}`;
    out.push({
      paradigm: "v4",
      stem,
      forms: [`${stem}na`, `${stem}ana`, `${stem}wana`],
      attested: [true, true, i % 2 === 0],
      frequency: 100 - i,
    });
  }
  return out;
}

describe("ReviewQueueController", () => {
  let server: FakeServer;
  let queue: ReviewQueueController;

  beforeEach(async () => {
    server = new FakeServer();
    server.addList("l0001", tenCandidates());
    const api = new ApiClient("", server.fetch);
    queue = new ReviewQueueController(api, "l0001");
    await queue.refresh();
  });

  it("shows pending candidates in frequency order", () => {
    expect(queue.tally().pending).toBe(10);
    expect(queue.current()?.stem).toBe("stem0");
  });

  it("processes a ten-candidate list to empty via keystrokes", async () => {
    const verdicts = ["a", "r", "a", "a", "r", "a", "r", "a", "a", "r"];
    for (const key of verdicts) {
      const handled = await queue.handleKey(key);
      expect(handled).toBe(true);
    }
    expect(queue.isEmpty()).toBe(true);
    expect(queue.current()).toBeNull();
    expect(queue.tally()).toEqual({ pending: 0, accepted: 6, rejected: 4 });
    // server state matches the keystrokes, in review (frequency) order
    const logged = server.decisionLog.map((d) => (d as { verdict: string }).verdict);
    expect(logged).toEqual(verdicts.map((k) => (k === "a" ? "accept" : "reject")));
    for (let i = 0; i < 10; i++) {
      const want = verdicts[i] === "a" ? "accepted" : "rejected";
      expect(server.statusOf("l0001", `v4/stem${i}`)).toBe(want);
    }
  });

  it("edit sends the edited forms and advances the queue", async () => {
    const handled = await queue.handleKey("e", () => ["bnna", "bnana", "bnwana"]);
    expect(handled).toBe(true);
    expect(queue.tally()).toEqual({ pending: 9, accepted: 1, rejected: 0 });
    const api = new ApiClient("", server.fetch);
    const accepted = await api.candidates("l0001", "accepted");
    expect(accepted.items[0].edited_forms).toEqual(["bnna", "bnana", "bnwana"]);
  });

  it("edit without forms is rejected client-side", async () => {
    await expect(queue.edit([])).rejects.toThrow(/non-empty/);
    await expect(queue.edit([" "])).rejects.toThrow(/non-empty/);
    expect(queue.tally().pending).toBe(10);
  });

  it("cancelled edit leaves the queue untouched", async () => {
    const handled = await queue.handleKey("e", () => null);
    expect(handled).toBe(false);
    expect(queue.tally().pending).toBe(10);
  });

  it("ignores unbound keys", async () => {
    expect(await queue.handleKey("x")).toBe(false);
    expect(queue.tally().pending).toBe(10);
  });

  it("keystrokes on an empty queue are safe", async () => {
    for (let i = 0; i < 10; i++) {
      await queue.accept();
    }
    expect(queue.isEmpty()).toBe(true);
    await queue.accept();
    expect(server.decisionLog.length).toBe(10);
  });

  it("a fresh controller reconstructs the same view from the server", async () => {
    await queue.accept();
    await queue.reject();
    const again = new ReviewQueueController(
      new ApiClient("", server.fetch), "l0001");
    await again.refresh();
    expect(again.tally()).toEqual(queue.tally());
    expect(again.current()?.stem).toBe(queue.current()?.stem);
  });
});

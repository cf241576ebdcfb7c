// Review-queue controller: keystroke-driven triage of extracted candidates.
// Holds no authoritative state; every decision is POSTed immediately and the
// queue refetched, so a reload reconstructs the same view from the server.

import { ApiClient, CandidateItem, Verdict } from "./api.js";

export interface QueueTally {
  accepted: number;
  rejected: number;
  pending: number;
}

export class ReviewQueueController {
  private items: CandidateItem[] = [];
  private tallies: QueueTally = { accepted: 0, rejected: 0, pending: 0 };

  constructor(
    private api: ApiClient,
    private listId: string,
    private pageSize = 50,
  ) {}

  async refresh(): Promise<void> {
    const pending = await this.api.candidates(
      this.listId, "pending", 0, this.pageSize);
    const accepted = await this.api.candidates(this.listId, "accepted", 0, 1);
    const rejected = await this.api.candidates(this.listId, "rejected", 0, 1);
    this.items = pending.items;
    this.tallies = {
      pending: pending.total,
      accepted: accepted.total,
      rejected: rejected.total,
    };
  }

  current(): CandidateItem | null {
    return this.items.length > 0 ? this.items[0] : null;
  }

  tally(): QueueTally {
    return { ...this.tallies };
  }

  isEmpty(): boolean {
    return this.tallies.pending === 0;
  }

  private async decide(verdict: Verdict, editedForms?: string[]): Promise<void> {
    const item = this.current();
    if (item === null) {
      return;
    }
    await this.api.decide({
      list_id: this.listId,
      paradigm: item.paradigm,
      stem: item.stem,
      verdict,
      edited_forms: editedForms,
    });
    await this.refresh();
  }

  async accept(): Promise<void> {
    await this.decide("accept");
  }

  async reject(): Promise<void> {
    await this.decide("reject");
  }

  async edit(forms: string[]): Promise<void> {
    if (forms.length === 0 || forms.some((f) => f.trim() === "")) {
      throw new Error("edit requires non-empty replacement forms");
    }
    await this.decide("edit", forms);
  }

  // Keyboard bindings: a = accept, r = reject, e = edit (the caller supplies
  // the edited forms, typically from a prompt or inline editor).
  async handleKey(key: string, editForms?: () => string[] | null): Promise<boolean> {
    if (key === "a") {
      await this.accept();
      return true;
    }
    if (key === "r") {
      await this.reject();
      return true;
    }
    if (key === "e" && editForms) {
      const forms = editForms();
      if (forms !== null) {
        await this.edit(forms);
        return true;
      }
    }
    return false;
  }
}

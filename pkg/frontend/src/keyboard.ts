// Onscreen keyboard built from the server's key map.  The buffer is Urdu
// text assembled purely from server-provided codepoints; the client never
// transliterates anything itself.

import { ApiClient, KeyboardKey } from "./api.js";

export class KeyboardController {
  private keys: KeyboardKey[] = [];
  private buffer = "";

  constructor(private api: ApiClient) {}

  async load(): Promise<void> {
    this.keys = await this.api.keyboardLayout();
  }

  layout(): KeyboardKey[] {
    return this.keys.slice();
  }

  letterKeys(): KeyboardKey[] {
    return this.keys.filter((k) => !k.diacritic);
  }

  diacriticKeys(): KeyboardKey[] {
    return this.keys.filter((k) => k.diacritic);
  }

  // Press a key by its roman token; returns false for unknown tokens.
  press(roman: string): boolean {
    const key = this.keys.find((k) => k.roman === roman);
    if (key === undefined) {
      return false;
    }
    this.buffer += key.urdu;
    return true;
  }

  space(): void {
    this.buffer += " ";
  }

  backspace(): void {
    // Remove one full codepoint, not one UTF-16 unit.
    const cps = Array.from(this.buffer);
    cps.pop();
    this.buffer = cps.join("");
  }

  clear(): void {
    this.buffer = "";
  }

  text(): string {
    return this.buffer;
  }
}

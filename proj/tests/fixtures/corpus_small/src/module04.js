// corpus_small module 4
"use strict";

/** @param {string} s */
function trim2(s) { return s.trim(); }
export const trimmed2 = trim2(76);

const name6 = "gamma";
export const called6 = () => name6();

export async function poll4(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 339));
    }
  }
  throw last;
}

export function describe9(item) {
  const label = `alpha:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale14(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 7);
  }
  return out;
}

const defaults19 = { mode: "delta", retries: 2, verbose: false };

export function configure19(overrides) {
  const merged = { ...defaults19, ...overrides };
  const keys = Object.keys(merged).filter((k) => k !== "verbose");
  return keys.reduce((acc, k) => {
    acc[k] = merged[k];
    return acc;
  }, {});
}

export class Store24 {
  constructor() {
    this.items = new Map();
    this.limit = 30;
  }

  /** @param {string} key */
  get(key) {
    return this.items.get(key);
  }

  set(key, value) {
    if (this.items.size >= this.limit) {
      const first = this.items.keys().next().value;
      this.items.delete(first);
    }
    this.items.set(key, value);
    return this;
  }
}

const pattern29 = /^tau-(\d+)\/[a-z]+$/i;
export function parse29(text) {
  // Slash inside a class: /[/]/ is still a regex.
  const m = pattern29.exec(text);
  if (!m) return null;
  const ratio = m[1].length / 2;
  return { id: Number(m[1]), ratio, tail: text.split(/[/]/g).pop() };
}

export const ratio34 = (9 + 5) / 2 / 9;
export const flags34 = [1, 2, 3].map((x) => x * 5).filter(Boolean);
export function safe34(obj) {
  return obj?.inner?.value ?? ratio34;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test34(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export async function poll39(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 60));
    }
  }
  throw last;
}

export function describe44(item) {
  const label = `alpha:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale49(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 9);
  }
  return out;
}


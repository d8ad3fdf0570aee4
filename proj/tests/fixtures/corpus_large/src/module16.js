// corpus_large module 16
"use strict";

const kind5 = typeof trimmedValue5;
var trimmedValue5 = 1;
export const isKind5 = kind5 === "strnig";

function pick14(a) { return a; }
export const picked14 = pick14(1, 2);

/** @type {{id: number}} */
export const entry30 = { id: 5, extra: true };

export function describe16(item) {
  const label = `delta:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe44(item) {
  const label = `sigma:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe72(item) {
  const label = `gamma:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe100(item) {
  const label = `sigma:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe128(item) {
  const label = `omega:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe156(item) {
  const label = `zeta:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe184(item) {
  const label = `gamma:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe212(item) {
  const label = `lambda:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe240(item) {
  const label = `kappa:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe268(item) {
  const label = `zeta:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe296(item) {
  const label = `zeta:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe324(item) {
  const label = `sigma:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe352(item) {
  const label = `alpha:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}

export function describe380(item) {
  const label = `delta:${item.name ?? "none"}`;
  const nested = `outer ${`inner ${item.size} units`} done`;
  /* block comment with a `backtick` and a "quote" */
  return `${label} (${nested})`;
}


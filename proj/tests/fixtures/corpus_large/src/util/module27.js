// corpus_large module 27
"use strict";

const size23 = 9;
export const field23 = size23.notAField;

const name39 = "rho";
export const called39 = () => name39();

export const ratio27 = (2 + 5) / 2 / 2;
export const flags27 = [1, 2, 3].map((x) => x * 5).filter(Boolean);
export function safe27(obj) {
  return obj?.inner?.value ?? ratio27;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test27(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio55 = (9 + 1) / 2 / 9;
export const flags55 = [1, 2, 3].map((x) => x * 1).filter(Boolean);
export function safe55(obj) {
  return obj?.inner?.value ?? ratio55;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test55(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio83 = (4 + 2) / 2 / 4;
export const flags83 = [1, 2, 3].map((x) => x * 2).filter(Boolean);
export function safe83(obj) {
  return obj?.inner?.value ?? ratio83;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test83(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio111 = (3 + 7) / 2 / 3;
export const flags111 = [1, 2, 3].map((x) => x * 7).filter(Boolean);
export function safe111(obj) {
  return obj?.inner?.value ?? ratio111;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test111(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio139 = (1 + 5) / 2 / 1;
export const flags139 = [1, 2, 3].map((x) => x * 5).filter(Boolean);
export function safe139(obj) {
  return obj?.inner?.value ?? ratio139;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test139(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio167 = (7 + 5) / 2 / 7;
export const flags167 = [1, 2, 3].map((x) => x * 5).filter(Boolean);
export function safe167(obj) {
  return obj?.inner?.value ?? ratio167;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test167(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio195 = (9 + 7) / 2 / 9;
export const flags195 = [1, 2, 3].map((x) => x * 7).filter(Boolean);
export function safe195(obj) {
  return obj?.inner?.value ?? ratio195;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test195(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio223 = (5 + 1) / 2 / 5;
export const flags223 = [1, 2, 3].map((x) => x * 1).filter(Boolean);
export function safe223(obj) {
  return obj?.inner?.value ?? ratio223;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test223(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio251 = (3 + 9) / 2 / 3;
export const flags251 = [1, 2, 3].map((x) => x * 9).filter(Boolean);
export function safe251(obj) {
  return obj?.inner?.value ?? ratio251;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test251(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio279 = (6 + 3) / 2 / 6;
export const flags279 = [1, 2, 3].map((x) => x * 3).filter(Boolean);
export function safe279(obj) {
  return obj?.inner?.value ?? ratio279;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test279(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio307 = (3 + 5) / 2 / 3;
export const flags307 = [1, 2, 3].map((x) => x * 5).filter(Boolean);
export function safe307(obj) {
  return obj?.inner?.value ?? ratio307;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test307(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio335 = (2 + 9) / 2 / 2;
export const flags335 = [1, 2, 3].map((x) => x * 9).filter(Boolean);
export function safe335(obj) {
  return obj?.inner?.value ?? ratio335;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test335(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio363 = (5 + 6) / 2 / 5;
export const flags363 = [1, 2, 3].map((x) => x * 6).filter(Boolean);
export function safe363(obj) {
  return obj?.inner?.value ?? ratio363;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test363(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}

export const ratio391 = (1 + 2) / 2 / 1;
export const flags391 = [1, 2, 3].map((x) => x * 2).filter(Boolean);
export function safe391(obj) {
  return obj?.inner?.value ?? ratio391;
}
// Division after a closing paren: (a) / b, and a regex after a keyword.
export function test391(s) {
  if (typeof s !== "string") return false;
  return /^[a-z]+$/.test(s) && (s.length) / 2 > 1;
}


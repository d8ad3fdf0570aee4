// corpus_large module 14
"use strict";

export const len10 = "omega".lenght;

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale14(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 3);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale42(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 4);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale70(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 7);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale98(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 7);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale126(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 6);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale154(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 4);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale182(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 2);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale210(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 6);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale238(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 5);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale266(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 5);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale294(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 6);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale322(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 6);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale350(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 8);
  }
  return out;
}

/**
 * Scales a list of readings.
 * @param {number[]} values
 * @param {number} factor
 */
export function scale378(values, factor) {
  const out = [];
  for (let j = 0; j < values.length; j++) {
    out.push(values[j] * factor / 3);
  }
  return out;
}


import { limit } from "./a.js";

/** @type {number} */
const n = limit;
export const doubled = n;

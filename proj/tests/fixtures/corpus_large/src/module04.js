// corpus_large module 4
"use strict";

export const len43 = "beta".lenght;

export async function poll4(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 409));
    }
  }
  throw last;
}

export async function poll32(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 213));
    }
  }
  throw last;
}

export async function poll60(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 413));
    }
  }
  throw last;
}

export async function poll88(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 260));
    }
  }
  throw last;
}

export async function poll116(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 242));
    }
  }
  throw last;
}

export async function poll144(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 47));
    }
  }
  throw last;
}

export async function poll172(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 366));
    }
  }
  throw last;
}

export async function poll200(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 411));
    }
  }
  throw last;
}

export async function poll228(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 161));
    }
  }
  throw last;
}

export async function poll256(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 36));
    }
  }
  throw last;
}

export async function poll284(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 72));
    }
  }
  throw last;
}

export async function poll312(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 351));
    }
  }
  throw last;
}

export async function poll340(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 396));
    }
  }
  throw last;
}

export async function poll368(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 392));
    }
  }
  throw last;
}

export async function poll396(fetcher, attempts = 3) {
  let last = null;
  for (let n = 0; n < attempts; n++) {
    try {
      return await fetcher(n);
    } catch (err) {
      last = err;
      await new Promise((resolve) => setTimeout(resolve, 145));
    }
  }
  throw last;
}


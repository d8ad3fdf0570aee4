// corpus_medium module 3
"use strict";

/** @type {{id: number, name: string}} */
export const record7 = { id: 5 };

const name17 = "gamma";
export const called17 = () => name17();

export class Store3 {
  constructor() {
    this.items = new Map();
    this.limit = 33;
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

export class Store17 {
  constructor() {
    this.items = new Map();
    this.limit = 26;
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

export class Store31 {
  constructor() {
    this.items = new Map();
    this.limit = 28;
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

export class Store45 {
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

export class Store59 {
  constructor() {
    this.items = new Map();
    this.limit = 9;
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

export class Store73 {
  constructor() {
    this.items = new Map();
    this.limit = 34;
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

export class Store87 {
  constructor() {
    this.items = new Map();
    this.limit = 33;
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

export class Store101 {
  constructor() {
    this.items = new Map();
    this.limit = 23;
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

export class Store115 {
  constructor() {
    this.items = new Map();
    this.limit = 8;
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

export class Store129 {
  constructor() {
    this.items = new Map();
    this.limit = 27;
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

export class Store143 {
  constructor() {
    this.items = new Map();
    this.limit = 11;
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

export class Store157 {
  constructor() {
    this.items = new Map();
    this.limit = 22;
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

export class Store171 {
  constructor() {
    this.items = new Map();
    this.limit = 18;
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


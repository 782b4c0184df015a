// Exact rationals as they appear on the wire: "num/den" with den > 0, or a
// bare integer when den is 1. Plot coordinates need floats; everything else
// keeps the string form.

const RATIONAL_RE = /^-?\d+(\/[1-9]\d*)?$/;

export interface Rational {
  num: bigint;
  den: bigint;
}

export function isRationalText(text: string): boolean {
  return RATIONAL_RE.test(text);
}

export function parseRational(text: string): Rational {
  if (!RATIONAL_RE.test(text)) {
    throw new Error(`not a rational: ${JSON.stringify(text)}`);
  }
  const slash = text.indexOf("/");
  if (slash < 0) {
    return { num: BigInt(text), den: 1n };
  }
  return reduce({
    num: BigInt(text.slice(0, slash)),
    den: BigInt(text.slice(slash + 1)),
  });
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  while (b !== 0n) {
    [a, b] = [b, a % b];
  }
  return a;
}

function reduce(r: Rational): Rational {
  const g = gcd(r.num, r.den);
  return g <= 1n ? r : { num: r.num / g, den: r.den / g };
}

export function formatRational(r: Rational): string {
  return r.den === 1n ? r.num.toString() : `${r.num}/${r.den}`;
}

export function rationalToNumber(r: Rational): number {
  return Number(r.num) / Number(r.den);
}

export function wireToNumber(text: string): number {
  return rationalToNumber(parseRational(text));
}

export function compareRationals(a: Rational, b: Rational): number {
  const left = a.num * b.den;
  const right = b.num * a.den;
  return left === right ? 0 : left < right ? -1 : 1;
}

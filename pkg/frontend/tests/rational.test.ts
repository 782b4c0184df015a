import { describe, expect, it } from "vitest";

import {
  compareRationals,
  formatRational,
  isRationalText,
  parseRational,
  rationalToNumber,
  wireToNumber,
} from "../src/rational.js";

describe("rational text", () => {
  it("accepts integers and reduced or unreduced fractions", () => {
    for (const text of ["0", "7", "-3", "1/2", "-9/4", "10/5", "1000000000000000000001/3"]) {
      expect(isRationalText(text)).toBe(true);
    }
  });

  it("rejects everything the server would reject", () => {
    for (const text of ["", "1.5", "1/0", "1/-2", "+3", "3/", "/2", " 1", "1 ", "a", "1/02"]) {
      expect(isRationalText(text)).toBe(false);
    }
  });

  it("parses and normalizes", () => {
    expect(parseRational("10/4")).toEqual({ num: 5n, den: 2n });
    expect(parseRational("-10/4")).toEqual({ num: -5n, den: 2n });
    expect(parseRational("0/7")).toEqual({ num: 0n, den: 1n });
    expect(parseRational("6")).toEqual({ num: 6n, den: 1n });
    expect(() => parseRational("1.5")).toThrow();
  });

  it("formats back to the wire form", () => {
    expect(formatRational(parseRational("10/4"))).toBe("5/2");
    expect(formatRational(parseRational("-8/2"))).toBe("-4");
    expect(formatRational(parseRational("0/3"))).toBe("0");
  });

  it("converts to numbers for plotting", () => {
    expect(rationalToNumber(parseRational("7/2"))).toBe(3.5);
    expect(rationalToNumber(parseRational("-1/4"))).toBe(-0.25);
    expect(wireToNumber("21")).toBe(21);
    expect(wireToNumber("-9/8")).toBe(-1.125);
  });

  it("orders exactly, without float help", () => {
    const big = "100000000000000000001/100000000000000000000";
    expect(compareRationals(parseRational(big), parseRational("1"))).toBe(1);
    expect(compareRationals(parseRational("1/3"), parseRational("2/6"))).toBe(0);
    expect(compareRationals(parseRational("-1/2"), parseRational("1/3"))).toBe(-1);
  });
});

//! Parsing of weight notation such as `(-2,2-2n)x(-n,-n)x(-2^n)`.
//!
//! Entries are integer expressions in the symbol `n` (with `+`, `-`, `*`,
//! implicit multiplication as in `2n`, and parentheses). An entry `a^b`
//! repeats `a` exactly `b` times. Factors are separated by `x` or `×`.

use crate::error::{HypermatError, Result};
use crate::weights::{TripleWeight, Weight};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    n: i64,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, n: i64) -> Self {
        Parser {
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            n,
            src,
        }
    }

    fn err(&self, msg: &str) -> HypermatError {
        HypermatError::Parse(format!("{msg} in {:?} at position {}", self.src, self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<i64> {
        let mut v = self.term()?;
        loop {
            if self.eat('+') {
                v += self.term()?;
            } else if self.eat('-') {
                v -= self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<i64> {
        let mut v = self.unary()?;
        loop {
            // An explicit `*` or juxtaposition such as `2n` multiplies.
            let juxtaposed = matches!(self.peek(), Some('n') | Some('('))
                || self.peek().is_some_and(|c| c.is_ascii_digit());
            if self.eat('*') || juxtaposed {
                v *= self.unary()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<i64> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<i64> {
        match self.peek() {
            Some('n') => {
                self.pos += 1;
                Ok(self.n)
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                s.parse::<i64>().map_err(|_| self.err("bad integer"))
            }
            _ => Err(self.err("expected a number, n, or '('")),
        }
    }

    fn done(&self) -> bool {
        self.pos == self.chars.len()
    }
}

/// Split on a separator character that is not nested inside parentheses.
fn split_top_level(s: &str, seps: &[char]) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && seps.contains(&c) {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    parts.push(cur);
    parts
}

/// Parse a single weight like `(-2,2-2n)` or `(-2^n)`.
pub fn parse_weight(s: &str, n: i64) -> Result<Weight> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| {
            HypermatError::Parse(format!("weight {t:?} must be enclosed in parentheses"))
        })?;
    let mut entries = Vec::new();
    if inner.trim().is_empty() {
        return Ok(Weight(entries));
    }
    for item in split_top_level(inner, &[',']) {
        let c: Vec<char> = item.trim().chars().collect();
        let split_token = (1..c.len().saturating_sub(1)).any(|i| {
            c[i].is_whitespace()
                && c[..i]
                    .iter()
                    .rev()
                    .find(|x| !x.is_whitespace())
                    .is_some_and(|x| x.is_alphanumeric())
                && c[i..]
                    .iter()
                    .find(|x| !x.is_whitespace())
                    .is_some_and(|x| x.is_alphanumeric())
        });
        if split_token {
            return Err(HypermatError::Parse(format!(
                "missing separator in {item:?}"
            )));
        }
        let pieces = split_top_level(&item, &['^']);
        let value = {
            let mut p = Parser::new(&pieces[0], n);
            let v = p.expr()?;
            if !p.done() {
                return Err(p.err("trailing characters"));
            }
            v
        };
        let count = match pieces.len() {
            1 => 1,
            2 => {
                let mut p = Parser::new(&pieces[1], n);
                let c = p.expr()?;
                if !p.done() || c < 0 {
                    return Err(p.err("bad repetition count"));
                }
                c
            }
            _ => return Err(HypermatError::Parse(format!("too many '^' in {item:?}"))),
        };
        for _ in 0..count {
            entries.push(value);
        }
    }
    Ok(Weight(entries))
}

/// Parse a triple `αxβxγ`; `γ` must have rank `n`.
pub fn parse_triple(s: &str, n: usize) -> Result<TripleWeight> {
    let parts = split_top_level(s.trim(), &['x', '×']);
    if parts.len() != 3 {
        return Err(HypermatError::Parse(format!(
            "expected three factors separated by 'x' in {s:?}"
        )));
    }
    let a = parse_weight(&parts[0], n as i64)?;
    let b = parse_weight(&parts[1], n as i64)?;
    let c = parse_weight(&parts[2], n as i64)?;
    if a.rank() != 2 || b.rank() != 2 || c.rank() != n {
        return Err(HypermatError::Parse(format!(
            "ranks ({}, {}, {}) do not match (2, 2, {n})",
            a.rank(),
            b.rank(),
            c.rank()
        )));
    }
    Ok(TripleWeight { a, b, c })
}

/// Parse an inclusive range `a..b` (or a single integer).
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || HypermatError::Parse(format!("bad range {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a = a.trim().parse::<i64>().map_err(|_| bad())?;
        let b = b
            .trim()
            .trim_start_matches('=')
            .parse::<i64>()
            .map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        Ok((a, b))
    } else {
        let a = s.trim().parse::<i64>().map_err(|_| bad())?;
        Ok((a, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_witness_weight() {
        let t = parse_triple("(-2,2-2n)x(-n,-n)x(-2^n)", 5).unwrap();
        assert_eq!(t, TripleWeight::new([-2, -8], [-5, -5], vec![-2; 5]));
        let t = parse_triple("(-n-1,-2n+1)x(-n-1,-2n+1)x(-3^n)", 4).unwrap();
        assert_eq!(t.a, Weight::from([-5, -7]));
    }

    #[test]
    fn plain_and_mixed_weights() {
        assert_eq!(parse_weight("(1,0,0)", 3).unwrap(), Weight::from([1, 0, 0]));
        assert_eq!(
            parse_weight("(-2,-2,2-n,2-n)", 7).unwrap(),
            Weight::from([-2, -2, -5, -5])
        );
        assert_eq!(parse_weight("(3^2,1)", 3).unwrap(), Weight::from([3, 3, 1]));
        assert_eq!(parse_weight("(2*(n-1))", 4).unwrap(), Weight::from([6]));
        assert_eq!(
            parse_triple("(0,0) × (0,0) × (0^n)", 4).unwrap().c,
            Weight::zero(4)
        );
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(parse_weight("1,2", 3).is_err());
        assert!(parse_weight("(1,,2)", 3).is_err());
        assert!(parse_weight("(1 2)", 3).is_err());
        assert!(parse_triple("(1,0)x(1,0)", 3).is_err());
        assert!(parse_triple("(1,0)x(1,0)x(1,0)", 3).is_err());
        assert_eq!(parse_range("3..6").unwrap(), (3, 6));
        assert_eq!(parse_range("4").unwrap(), (4, 4));
        assert!(parse_range("6..3").is_err());
    }
}

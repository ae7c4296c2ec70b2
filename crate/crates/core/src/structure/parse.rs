//! Parser for the structure-equation file format.
//!
//! Line-oriented grammar, `#` starts a comment, whitespace-insensitive
//! between tokens:
//!
//! ```text
//! ndim <n>
//! label <free text>            # optional
//! d f<j> = 0
//! d f<j> = <coeff> f<h>^f<k> [+ <coeff> f<h>^F<k>]...
//! ```
//!
//! `<coeff>` is `(re, im)` with rational components, `f<k>` is φ^k, `F<k>`
//! is φ̄^k. Exactly one `d` line per generator j ∈ {1…n}. Terms with two `F`
//! factors are rejected: dφ^j may not have a (0,2) part (integrability).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exterior::{Form, Monomial};
use crate::scalars::GaussianRational;
use crate::structure::{Presentation, StructureError};

/// Parse errors, each carrying the 1-based line (and usually column) of the
/// offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error(
        "line {line}, column {col}: term of bidegree (0,2); dφ^j must lie in Λ^(2,0) ⊕ Λ^(1,1)"
    )]
    AntiHolomorphicTerm { line: usize, col: usize },
    #[error("line {line}, column {col}: generator index {index} out of range for ndim {n}")]
    IndexOutOfRange {
        line: usize,
        col: usize,
        index: u32,
        n: u32,
    },
    #[error("line {line}: duplicate differential for generator {j}")]
    DuplicateDifferential { line: usize, j: u32 },
    #[error("missing differential line for generator {j}")]
    MissingDifferential { j: u32 },
    #[error(transparent)]
    Invalid(#[from] StructureError),
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

/// Parse a complete structure-equation file into a presentation.
pub fn parse(text: &str) -> Result<Presentation, ParseError> {
    let mut n: Option<u32> = None;
    let mut label: Option<String> = None;
    let mut diff: BTreeMap<u32, Form> = BTreeMap::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut scanner = Scanner::new(content, line_no);
        scanner.skip_ws();
        let (directive, directive_col) = scanner.take_word();
        match (directive.as_str(), n) {
            ("ndim", Some(_)) => {
                return Err(syntax(line_no, directive_col, "duplicate `ndim` directive"));
            }
            ("ndim", None) => {
                scanner.skip_ws();
                let (value, col) = scanner.parse_u32("dimension")?;
                if !(1..=8).contains(&value) {
                    return Err(syntax(
                        line_no,
                        col,
                        format!("ndim must be between 1 and 8, got {value}"),
                    ));
                }
                scanner.expect_end()?;
                n = Some(value);
            }
            (_, None) => {
                return Err(syntax(
                    line_no,
                    directive_col,
                    "expected `ndim <n>` as the first directive",
                ));
            }
            ("label", Some(_)) => {
                if label.is_some() {
                    return Err(syntax(
                        line_no,
                        directive_col,
                        "duplicate `label` directive",
                    ));
                }
                let rest = scanner.rest().trim().to_owned();
                if rest.is_empty() {
                    return Err(syntax(line_no, scanner.col(), "`label` requires text"));
                }
                label = Some(rest);
            }
            ("d", Some(n)) => {
                let (j, form) = parse_differential_line(&mut scanner, n)?;
                if diff.contains_key(&j) {
                    return Err(ParseError::DuplicateDifferential { line: line_no, j });
                }
                diff.insert(j, form);
            }
            (other, Some(_)) => {
                return Err(syntax(
                    line_no,
                    directive_col,
                    format!("unrecognized directive `{other}`; expected `label` or `d`"),
                ));
            }
        }
    }

    let n = n.ok_or_else(|| syntax(1, 1, "missing `ndim` directive"))?;
    let mut forms = Vec::with_capacity(n as usize);
    for j in 1..=n {
        let form = diff
            .remove(&j)
            .ok_or(ParseError::MissingDifferential { j })?;
        forms.push(form);
    }
    Ok(Presentation::new(n, label, forms)?)
}

/// Parse ` f<j> = RHS` after the leading `d` has been consumed.
fn parse_differential_line(scanner: &mut Scanner, n: u32) -> Result<(u32, Form), ParseError> {
    scanner.skip_ws();
    let (is_anti, j, col) = scanner.parse_factor()?;
    if is_anti {
        return Err(syntax(
            scanner.line,
            col,
            "differentials are declared for holomorphic generators `f<j>` only",
        ));
    }
    check_index(scanner.line, col, j, n)?;
    scanner.skip_ws();
    scanner.expect_char('=')?;
    scanner.skip_ws();
    if scanner.peek() == Some('0') {
        scanner.bump();
        scanner.skip_ws();
        if !scanner.at_end() {
            return Err(syntax(
                scanner.line,
                scanner.col(),
                "unexpected input after `0` (a zero differential has no terms)",
            ));
        }
        return Ok((j, Form::zero()));
    }
    let mut form = Form::zero();
    loop {
        let term_col = scanner.col();
        let coeff = scanner.parse_coefficient()?;
        scanner.skip_ws();
        let (anti_1, idx_1, col_1) = scanner.parse_factor()?;
        check_index(scanner.line, col_1, idx_1, n)?;
        scanner.skip_ws();
        scanner.expect_char('^')?;
        scanner.skip_ws();
        let (anti_2, idx_2, col_2) = scanner.parse_factor()?;
        check_index(scanner.line, col_2, idx_2, n)?;
        if anti_1 && anti_2 {
            return Err(ParseError::AntiHolomorphicTerm {
                line: scanner.line,
                col: term_col,
            });
        }
        let factor = |anti: bool, idx: u32| {
            if anti {
                Monomial::anti_generator(idx)
            } else {
                Monomial::holo_generator(idx)
            }
        };
        let Some((sign, mono)) = factor(anti_1, idx_1).wedge(&factor(anti_2, idx_2)) else {
            return Err(syntax(
                scanner.line,
                col_2,
                "repeated generator in a wedge term",
            ));
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        form.add_term(signed, mono);
        scanner.skip_ws();
        if scanner.at_end() {
            break;
        }
        scanner.expect_char('+')?;
        scanner.skip_ws();
    }
    Ok((j, form))
}

fn check_index(line: usize, col: usize, index: u32, n: u32) -> Result<(), ParseError> {
    if index == 0 || index > n {
        return Err(ParseError::IndexOutOfRange {
            line,
            col,
            index,
            n,
        });
    }
    Ok(())
}

/// Character scanner over one line with 1-based column tracking.
struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Scanner {
    fn new(content: &str, line: usize) -> Self {
        Scanner {
            chars: content.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> String {
        self.chars[self.pos..].iter().collect()
    }

    /// Consume a run of non-whitespace characters (the directive word).
    fn take_word(&mut self) -> (String, usize) {
        let col = self.col();
        let mut word = String::new();
        while matches!(self.peek(), Some(c) if !c.is_whitespace()) {
            word.push(self.bump().unwrap());
        }
        (word, col)
    }

    fn expect_char(&mut self, expected: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == expected => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(syntax(
                self.line,
                self.col(),
                format!("expected `{expected}`, found `{c}`"),
            )),
            None => Err(syntax(
                self.line,
                self.col(),
                format!("expected `{expected}`, found end of line"),
            )),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(syntax(self.line, self.col(), "unexpected trailing input"))
        }
    }

    fn parse_u32(&mut self, what: &str) -> Result<(u32, usize), ParseError> {
        let col = self.col();
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(syntax(self.line, col, format!("expected {what} (digits)")));
        }
        digits
            .parse::<u32>()
            .map(|v| (v, col))
            .map_err(|_| syntax(self.line, col, format!("{what} out of range")))
    }

    /// `f<j>` (holomorphic) or `F<j>` (anti-holomorphic).
    fn parse_factor(&mut self) -> Result<(bool, u32, usize), ParseError> {
        let col = self.col();
        let is_anti = match self.peek() {
            Some('f') => false,
            Some('F') => true,
            Some(c) => {
                return Err(syntax(
                    self.line,
                    col,
                    format!("expected a generator `f<j>` or `F<j>`, found `{c}`"),
                ));
            }
            None => {
                return Err(syntax(
                    self.line,
                    col,
                    "expected a generator `f<j>` or `F<j>`, found end of line",
                ));
            }
        };
        self.bump();
        let (index, _) = self.parse_u32("generator index")?;
        Ok((is_anti, index, col))
    }

    /// Coefficient `(re, im)` in the shared scalar syntax.
    fn parse_coefficient(&mut self) -> Result<GaussianRational, ParseError> {
        let col = self.col();
        if self.peek() != Some('(') {
            return Err(syntax(self.line, col, "expected a coefficient `(re, im)`"));
        }
        let mut literal = String::new();
        loop {
            match self.bump() {
                Some(c) => {
                    literal.push(c);
                    if c == ')' {
                        break;
                    }
                }
                None => {
                    return Err(syntax(
                        self.line,
                        self.col(),
                        "unterminated coefficient, expected `)`",
                    ));
                }
            }
        }
        literal
            .parse::<GaussianRational>()
            .map_err(|e| syntax(self.line, col, e.to_string()))
    }
}

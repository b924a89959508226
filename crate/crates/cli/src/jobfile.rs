//! Jobfile grammar. Statements end with `;`, `#` starts a comment:
//!
//! ```text
//! ring Q[x,y,z] grevlex;                 field Q or Q(t|<minimal polynomial in t>)
//! ideal a = (x*y, x*z, y*z);
//! poly f = x*y*z;
//! primes a = (x,y), (x,z), (y,z);        minimal primes attached to an ideal
//! set seed 7;                            format | seed | gb-degree-cap | local-N-cap | time-budget-sec | skip-slow
//! sympow a 2 --components auto;          any command, see `Command`
//! ```
//!
//! Ideal arguments are names or `( ... )` literals, polynomial arguments are
//! names or `[ ... ]` literals.

use std::collections::HashMap;
use std::fmt;

use symrees::error::Error;
use symrees::exactnum::{FieldConfig, Rational};
use symrees::idealops::Ideal;
use symrees::polyring::{parse_polynomial_at, MonomialOrder, Polynomial, Ring, RingContext};

/// A parse or validation error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "text" => Some(OutputFormat::Text),
            "json" => Some(OutputFormat::Json),
            _ => None,
        }
    }
}

/// Options settable by `set` statements; command-line flags override them.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct JobOptions {
    pub format: Option<OutputFormat>,
    pub seed: Option<u64>,
    pub gb_degree_cap: Option<u32>,
    pub local_n_cap: Option<u32>,
    pub time_budget_sec: Option<f64>,
    pub skip_slow: Option<bool>,
}

impl JobOptions {
    /// Fields of `over` win over fields of `self`.
    pub fn merged(&self, over: &JobOptions) -> JobOptions {
        JobOptions {
            format: over.format.or(self.format),
            seed: over.seed.or(self.seed),
            gb_degree_cap: over.gb_degree_cap.or(self.gb_degree_cap),
            local_n_cap: over.local_n_cap.or(self.local_n_cap),
            time_budget_sec: over.time_budget_sec.or(self.time_budget_sec),
            skip_slow: over.skip_slow.or(self.skip_slow),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyChoice {
    Edge,
    Fermat,
    Jacobian,
}

impl FamilyChoice {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "edge" | "edge-complete" => Some(FamilyChoice::Edge),
            "fermat" => Some(FamilyChoice::Fermat),
            "jacobian" | "jacobian-arrangement" => Some(FamilyChoice::Jacobian),
            _ => None,
        }
    }

    pub fn default_n(self) -> Option<u32> {
        match self {
            FamilyChoice::Edge | FamilyChoice::Fermat => Some(3),
            FamilyChoice::Jacobian => None,
        }
    }
}

/// Symbolic-power route selected by `--components` / `--at`.
#[derive(Debug, Clone)]
pub enum MethodChoice {
    /// Declared primes when present, otherwise saturation at the maximal ideal.
    Auto,
    SaturateAtMax,
    Components,
    AtElement(NamedPoly),
}

#[derive(Debug, Clone)]
pub struct NamedIdeal {
    pub label: String,
    pub ideal: Ideal,
    pub primes: Option<Vec<Ideal>>,
}

#[derive(Debug, Clone)]
pub struct NamedPoly {
    pub label: String,
    pub poly: Polynomial,
}

#[derive(Debug, Clone)]
pub enum SaturateBy {
    Ideal(NamedIdeal),
    Poly(NamedPoly),
}

#[derive(Debug, Clone)]
pub enum Command {
    Gb(NamedIdeal),
    Hilbert(NamedIdeal),
    Length(NamedIdeal),
    LocalLength(NamedIdeal),
    Sympow {
        ideal: NamedIdeal,
        exponent: u32,
        method: MethodChoice,
        compare: bool,
    },
    Member {
        poly: NamedPoly,
        ideal: NamedIdeal,
    },
    Radmember {
        poly: NamedPoly,
        ideal: NamedIdeal,
    },
    Intersect(NamedIdeal, NamedIdeal),
    Saturate {
        ideal: NamedIdeal,
        by: SaturateBy,
    },
    Dim(NamedIdeal),
    Spread(NamedIdeal),
    Reduction {
        j: NamedIdeal,
        i: NamedIdeal,
        r_max: u32,
    },
    Criterion {
        ideal: NamedIdeal,
        x: Vec<NamedPoly>,
        f: Vec<(NamedPoly, u32)>,
        multiplicities: Option<Vec<i64>>,
    },
    Stci {
        ideal: NamedIdeal,
        f: Vec<NamedPoly>,
    },
    Sop {
        ideal: NamedIdeal,
        count: Option<usize>,
    },
    Family {
        family: FamilyChoice,
        n: Option<u32>,
        cyclotomic: bool,
    },
    VerifyPaper {
        family: FamilyChoice,
        n: Option<u32>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb(_) => "gb",
            Command::Hilbert(_) => "hilbert",
            Command::Length(_) => "length",
            Command::LocalLength(_) => "local-length",
            Command::Sympow { .. } => "sympow",
            Command::Member { .. } => "member",
            Command::Radmember { .. } => "radmember",
            Command::Intersect(..) => "intersect",
            Command::Saturate { .. } => "saturate",
            Command::Dim(_) => "dim",
            Command::Spread(_) => "spread",
            Command::Reduction { .. } => "reduction",
            Command::Criterion { .. } => "criterion",
            Command::Stci { .. } => "stci",
            Command::Sop { .. } => "sop",
            Command::Family { .. } => "family",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

#[derive(Debug, Clone)]
pub struct LocatedCommand {
    pub line: usize,
    pub command: Command,
}

/// A validated job.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub ring: Option<Ring>,
    pub ideals: Vec<(String, Ideal)>,
    pub polys: Vec<(String, Polynomial)>,
    pub options: JobOptions,
    pub commands: Vec<LocatedCommand>,
}

type PResult<T> = std::result::Result<T, Diagnostic>;

struct Source<'a> {
    text: &'a str,
    line_starts: Vec<usize>,
}

impl<'a> Source<'a> {
    fn new(text: &'a str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(text.match_indices('\n').map(|(i, _)| i + 1));
        Source { text, line_starts }
    }

    fn position(&self, offset: usize) -> (usize, usize) {
        let offset = offset.min(self.text.len());
        let line = self.line_starts.partition_point(|&s| s <= offset);
        let start = self.line_starts[line - 1];
        let column = self.text[start..offset].chars().count() + 1;
        (line, column)
    }

    fn diag(&self, offset: usize, message: impl Into<String>) -> Diagnostic {
        let (line, column) = self.position(offset);
        Diagnostic {
            line,
            column,
            message: message.into(),
        }
    }

    fn core_error(&self, offset: usize, e: Error) -> Diagnostic {
        match e {
            Error::Parse { offset: at, message } => self.diag(at, message),
            other => self.diag(offset, other.to_string()),
        }
    }
}

/// A piece of statement text with its absolute byte offset.
#[derive(Debug, Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Span<'a> {
    fn slice(&self, from: usize, to: usize) -> Span<'a> {
        Span {
            text: &self.text[from..to],
            at: self.at + from,
        }
    }

    fn trim(&self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        let t = self.text.trim();
        Span {
            text: t,
            at: self.at + lead,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TokKind {
    Word,
    Paren,
    Bracket,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    kind: TokKind,
    /// Full text including delimiters.
    span: Span<'a>,
}

impl<'a> Token<'a> {
    fn inner(&self) -> Span<'a> {
        match self.kind {
            TokKind::Word => self.span,
            _ => self.span.slice(1, self.span.text.len() - 1),
        }
    }
}

/// Blanks `#` comments with spaces so byte offsets and positions are kept.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for ch in text.chars() {
        if ch == '\n' {
            in_comment = false;
            out.push('\n');
        } else if in_comment || ch == '#' {
            in_comment = true;
            out.extend(std::iter::repeat_n(' ', ch.len_utf8()));
        } else {
            out.push(ch);
        }
    }
    out
}

/// Splits comment-free text into statements with absolute offsets.
fn statements<'a>(src: &Source<'a>) -> PResult<Vec<Span<'a>>> {
    let text = src.text;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        if ch == ';' {
            let st = Span {
                text: &text[start..i],
                at: start,
            };
            check_balance(src, st)?;
            if !st.text.trim().is_empty() {
                out.push(st.trim());
            }
            start = i + 1;
        }
    }
    let rest = Span {
        text: &text[start..],
        at: start,
    };
    if !rest.text.trim().is_empty() {
        check_balance(src, rest)?;
        let r = rest.trim();
        return Err(src.diag(r.at + r.text.len(), "missing `;` at end of statement"));
    }
    Ok(out)
}

fn check_balance(src: &Source, st: Span) -> PResult<()> {
    let mut stack: Vec<(char, usize)> = Vec::new();
    for (i, ch) in st.text.char_indices() {
        match ch {
            '(' | '[' => stack.push((ch, st.at + i)),
            ')' | ']' => {
                let want = if ch == ')' { '(' } else { '[' };
                match stack.pop() {
                    Some((open, _)) if open == want => {}
                    Some((open, at)) => {
                        return Err(src.diag(at, format!("`{open}` closed by `{ch}`")));
                    }
                    None => return Err(src.diag(st.at + i, format!("unmatched `{ch}`"))),
                }
            }
            _ => {}
        }
    }
    match stack.pop() {
        Some((open, at)) => Err(src.diag(at, format!("unclosed `{open}`"))),
        None => Ok(()),
    }
}

fn tokenize(st: Span) -> Vec<Token> {
    let text = st.text;
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch == '(' || ch == '[' {
            let kind = if ch == '(' { TokKind::Paren } else { TokKind::Bracket };
            let mut depth = 0;
            let mut end = text.len();
            for (j, c) in chars.by_ref() {
                match c {
                    '(' | '[' => depth += 1,
                    ')' | ']' => {
                        depth -= 1;
                        if depth == 0 {
                            end = j + 1;
                            break;
                        }
                    }
                    _ => {}
                }
            }
            toks.push(Token {
                kind,
                span: st.slice(i, end),
            });
            continue;
        }
        let mut end = text.len();
        while let Some(&(j, c)) = chars.peek() {
            if c.is_whitespace() || c == '(' || c == '[' {
                end = j;
                break;
            }
            chars.next();
        }
        toks.push(Token {
            kind: TokKind::Word,
            span: st.slice(i, end),
        });
    }
    toks
}

/// Splits `span` at top-level commas.
fn split_commas(span: Span) -> Vec<Span> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in span.text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(span.slice(start, i));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(span.slice(start, span.text.len()));
    out
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    src: Source<'a>,
    ring: Option<Ring>,
    ideals: HashMap<String, Ideal>,
    ideal_order: Vec<String>,
    polys: HashMap<String, Polynomial>,
    poly_order: Vec<String>,
    primes: HashMap<String, Vec<Ideal>>,
    options: JobOptions,
    commands: Vec<LocatedCommand>,
}

/// Parses and validates a jobfile.
pub fn parse_jobfile(text: &str) -> PResult<JobSpec> {
    let cleaned = strip_comments(text);
    let src = Source::new(&cleaned);
    let stmts = statements(&src)?;
    let mut p = Parser {
        src,
        ring: None,
        ideals: HashMap::new(),
        ideal_order: Vec::new(),
        polys: HashMap::new(),
        poly_order: Vec::new(),
        primes: HashMap::new(),
        options: JobOptions::default(),
        commands: Vec::new(),
    };
    for st in stmts {
        p.statement(st)?;
    }
    let ideals = p.ideal_order.iter().map(|n| (n.clone(), p.ideals[n].clone())).collect();
    let polys = p.poly_order.iter().map(|n| (n.clone(), p.polys[n].clone())).collect();
    Ok(JobSpec {
        ring: p.ring,
        ideals,
        polys,
        options: p.options,
        commands: p.commands,
    })
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, msg: impl Into<String>) -> PResult<T> {
        Err(self.src.diag(at, msg))
    }

    fn ring(&self, at: usize) -> PResult<&Ring> {
        match &self.ring {
            Some(r) => Ok(r),
            None => self.err(at, "no `ring` declared before this statement"),
        }
    }

    fn statement(&mut self, st: Span<'a>) -> PResult<()> {
        let kw_end = st
            .text
            .find(|c: char| c.is_whitespace() || c == '(' || c == '[')
            .unwrap_or(st.text.len());
        let keyword = &st.text[..kw_end];
        let rest = st.slice(kw_end, st.text.len());
        match keyword {
            "ring" => self.ring_statement(st, rest),
            "ideal" => self.ideal_statement(rest),
            "poly" => self.poly_statement(rest),
            "primes" => self.primes_statement(rest),
            "set" => self.set_statement(rest),
            _ => {
                let toks = tokenize(st);
                let line = self.src.position(st.at).0;
                let command = self.command(&toks)?;
                self.commands.push(LocatedCommand { line, command });
                Ok(())
            }
        }
    }

    fn ring_statement(&mut self, st: Span, rest: Span) -> PResult<()> {
        if self.ring.is_some() {
            return self.err(st.at, "a job declares exactly one ring");
        }
        if !self.ideals.is_empty() || !self.polys.is_empty() {
            return self.err(st.at, "`ring` must precede ideals and polynomials");
        }
        let rest = rest.trim();
        let Some(open) = rest.text.find('[') else {
            return self.err(rest.at, "expected `[variables]` after the field");
        };
        // the bracket group is balanced by the statement check
        let close = open + rest.text[open..].find(']').expect("balanced brackets");
        let field_span = rest.slice(0, open).trim();
        let field = self.field(field_span)?;
        let mut vars = Vec::new();
        for v in split_commas(rest.slice(open + 1, close)) {
            let v = v.trim();
            if !is_identifier(v.text) {
                return self.err(v.at, format!("`{}` is not a variable name", v.text));
            }
            vars.push(v.text.to_string());
        }
        let order_span = rest.slice(close + 1, rest.text.len()).trim();
        let order = if order_span.text.is_empty() {
            MonomialOrder::Grevlex
        } else {
            self.order(order_span)?
        };
        let ring = RingContext::with_limits(field, vars, order, Default::default())
            .map_err(|e| self.src.core_error(rest.at, e))?;
        self.ring = Some(ring);
        Ok(())
    }

    fn field(&self, span: Span) -> PResult<std::sync::Arc<FieldConfig>> {
        if span.text == "Q" {
            return Ok(FieldConfig::rationals());
        }
        let t = span.text;
        if !(t.starts_with("Q(") && t.ends_with(')')) {
            return self.err(span.at, "field must be `Q` or `Q(t|minimal polynomial)`");
        }
        let inner = span.slice(2, t.len() - 1);
        let Some(bar) = inner.text.find('|') else {
            return self.err(inner.at, "expected `generator|minimal polynomial`");
        };
        let gen = inner.slice(0, bar).trim();
        if !is_identifier(gen.text) {
            return self.err(gen.at, format!("`{}` is not a generator name", gen.text));
        }
        let modulus_span = inner.slice(bar + 1, inner.text.len());
        let uni = RingContext::new(FieldConfig::rationals(), &[gen.text], MonomialOrder::Lex)
            .map_err(|e| self.src.core_error(gen.at, e))?;
        let m = parse_polynomial_at(&uni, modulus_span.text, modulus_span.at)
            .map_err(|e| self.src.core_error(modulus_span.at, e))?;
        let deg = m.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (mono, c) in m.terms() {
            coeffs[mono.degree() as usize] = c.coefficients()[0].clone();
        }
        FieldConfig::number_field(coeffs, gen.text).map_err(|_| {
            self.src
                .diag(modulus_span.at, "minimal polynomial must be monic of degree ≥ 1")
        })
    }

    fn order(&self, span: Span) -> PResult<MonomialOrder> {
        let t = span.text;
        match t {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "deglex" => Ok(MonomialOrder::Deglex),
            _ => {
                if let Some(k) = t.strip_prefix("block(").and_then(|r| r.strip_suffix(')')) {
                    if let Ok(k) = k.trim().parse() {
                        return Ok(MonomialOrder::Block(k));
                    }
                }
                self.err(span.at, format!("unknown monomial order `{t}`"))
            }
        }
    }

    /// `name = body`, returning the name and the body span.
    fn assignment(&self, rest: Span<'a>, what: &str) -> PResult<(String, Span<'a>)> {
        let rest = rest.trim();
        let Some(eq) = rest.text.find('=') else {
            return self.err(rest.at, format!("expected `{what} name = ...`"));
        };
        let name = rest.slice(0, eq).trim();
        if !is_identifier(name.text) {
            return self.err(name.at, format!("`{}` is not a valid name", name.text));
        }
        Ok((name.text.to_string(), rest.slice(eq + 1, rest.text.len()).trim()))
    }

    fn ideal_literal(&self, body: Span) -> PResult<Ideal> {
        let ring = self.ring(body.at)?.clone();
        let toks = tokenize(body);
        if toks.len() != 1 || toks[0].kind != TokKind::Paren {
            return self.err(body.at, "expected a parenthesized generator list `( ... )`");
        }
        let inner = toks[0].inner();
        let mut gens = Vec::new();
        if !inner.text.trim().is_empty() {
            for g in split_commas(inner) {
                gens.push(self.polynomial(&ring, g)?);
            }
        }
        Ideal::new(&ring, gens).map_err(|e| self.src.core_error(body.at, e))
    }

    fn polynomial(&self, ring: &Ring, span: Span) -> PResult<Polynomial> {
        if span.text.trim().is_empty() {
            return self.err(span.at, "empty polynomial");
        }
        parse_polynomial_at(ring, span.text, span.at).map_err(|e| self.src.core_error(span.at, e))
    }

    fn ideal_statement(&mut self, rest: Span<'a>) -> PResult<()> {
        let (name, body) = self.assignment(rest, "ideal")?;
        let ideal = self.ideal_literal(body)?;
        if self.ideals.insert(name.clone(), ideal).is_some() {
            return self.err(rest.trim().at, format!("ideal `{name}` declared twice"));
        }
        self.ideal_order.push(name);
        Ok(())
    }

    fn poly_statement(&mut self, rest: Span<'a>) -> PResult<()> {
        let (name, body) = self.assignment(rest, "poly")?;
        let ring = self.ring(body.at)?.clone();
        let p = self.polynomial(&ring, body)?;
        if self.polys.insert(name.clone(), p).is_some() {
            return self.err(rest.trim().at, format!("polynomial `{name}` declared twice"));
        }
        self.poly_order.push(name);
        Ok(())
    }

    fn primes_statement(&mut self, rest: Span<'a>) -> PResult<()> {
        let (name, body) = self.assignment(rest, "primes")?;
        if !self.ideals.contains_key(&name) {
            return self.err(rest.trim().at, format!("unknown ideal `{name}`"));
        }
        let mut primes = Vec::new();
        for part in split_commas(body) {
            primes.push(self.ideal_literal(part.trim())?);
        }
        self.primes.insert(name, primes);
        Ok(())
    }

    fn set_statement(&mut self, rest: Span<'a>) -> PResult<()> {
        let toks = tokenize(rest);
        if toks.is_empty() || toks.len() > 2 {
            return self.err(rest.at, "expected `set option value`");
        }
        let key = toks[0].span;
        let value = toks.get(1).map(|t| t.span);
        let need = |p: &Self| -> PResult<Span> {
            value.ok_or_else(|| {
                p.src
                    .diag(key.at + key.text.len(), format!("`{}` needs a value", key.text))
            })
        };
        match key.text {
            "format" => {
                let v = need(self)?;
                self.options.format =
                    Some(OutputFormat::parse(v.text).ok_or_else(|| self.src.diag(v.at, "format is `text` or `json`"))?);
            }
            "seed" => self.options.seed = Some(self.number(need(self)?)?),
            "gb-degree-cap" => self.options.gb_degree_cap = Some(self.number(need(self)?)?),
            "local-N-cap" => self.options.local_n_cap = Some(self.number(need(self)?)?),
            "time-budget-sec" => {
                let v = need(self)?;
                let secs: f64 = v
                    .text
                    .parse()
                    .map_err(|_| self.src.diag(v.at, "expected a number of seconds"))?;
                if !(secs > 0.0 && secs.is_finite()) {
                    return self.err(v.at, "time budget must be positive");
                }
                self.options.time_budget_sec = Some(secs);
            }
            "skip-slow" => {
                self.options.skip_slow = Some(match value.map(|v| v.text) {
                    None | Some("true") => true,
                    Some("false") => false,
                    Some(_) => return self.err(value.unwrap().at, "expected `true` or `false`"),
                })
            }
            other => return self.err(key.at, format!("unknown option `{other}`")),
        }
        Ok(())
    }

    fn number<T: std::str::FromStr>(&self, span: Span) -> PResult<T> {
        span.text.parse().map_err(|_| {
            self.src.diag(
                span.at,
                format!("expected a non-negative integer, found `{}`", span.text),
            )
        })
    }

    fn ideal_arg(&self, tok: &Token) -> PResult<NamedIdeal> {
        match tok.kind {
            TokKind::Paren => Ok(NamedIdeal {
                label: tok.span.text.to_string(),
                ideal: self.ideal_literal(tok.span)?,
                primes: None,
            }),
            TokKind::Word => match self.ideals.get(tok.span.text) {
                Some(i) => Ok(NamedIdeal {
                    label: tok.span.text.to_string(),
                    ideal: i.clone(),
                    primes: self.primes.get(tok.span.text).cloned(),
                }),
                None => self.err(tok.span.at, format!("unknown ideal `{}`", tok.span.text)),
            },
            TokKind::Bracket => self.err(tok.span.at, "expected an ideal, found a polynomial literal"),
        }
    }

    fn poly_arg(&self, tok: &Token) -> PResult<NamedPoly> {
        match tok.kind {
            TokKind::Bracket => {
                let ring = self.ring(tok.span.at)?.clone();
                let inner = tok.inner();
                Ok(NamedPoly {
                    label: inner.text.trim().to_string(),
                    poly: self.polynomial(&ring, inner)?,
                })
            }
            TokKind::Word => match self.polys.get(tok.span.text) {
                Some(p) => Ok(NamedPoly {
                    label: tok.span.text.to_string(),
                    poly: p.clone(),
                }),
                None => self.err(
                    tok.span.at,
                    format!("unknown polynomial `{}` (inline literals use `[...]`)", tok.span.text),
                ),
            },
            TokKind::Paren => self.err(tok.span.at, "expected a polynomial, found an ideal literal"),
        }
    }

    fn command(&self, toks: &[Token<'a>]) -> PResult<Command> {
        let head = toks[0].span;
        let mut positional = Vec::new();
        let mut flags: Vec<(Span, Vec<Token>)> = Vec::new();
        for t in &toks[1..] {
            if t.kind == TokKind::Word && t.span.text.starts_with("--") {
                flags.push((t.span, Vec::new()));
            } else if let Some((_, vals)) = flags.last_mut() {
                vals.push(*t);
            } else {
                positional.push(*t);
            }
        }
        let arity = |lo: usize, hi: usize| -> PResult<()> {
            if positional.len() < lo || positional.len() > hi {
                let want = if lo == hi {
                    format!("{lo}")
                } else {
                    format!("{lo} to {hi}")
                };
                let at = positional
                    .get(hi)
                    .map(|t| t.span.at)
                    .unwrap_or(head.at + head.text.len());
                return self.err(
                    at,
                    format!(
                        "`{}` takes {want} positional arguments, found {}",
                        head.text,
                        positional.len()
                    ),
                );
            }
            Ok(())
        };
        let allowed = |names: &[&str]| -> PResult<()> {
            for (f, _) in &flags {
                if !names.contains(&&f.text[2..]) {
                    return self.err(f.at, format!("unknown flag `{}` for `{}`", f.text, head.text));
                }
            }
            Ok(())
        };
        let single = |name: &str| -> PResult<Option<Token>> {
            let mut found = None;
            for (f, vals) in &flags {
                if &f.text[2..] == name {
                    if vals.len() != 1 {
                        return self.err(f.at, format!("`{}` takes exactly one value", f.text));
                    }
                    found = Some(vals[0]);
                }
            }
            Ok(found)
        };
        let switch = |name: &str| -> PResult<bool> {
            for (f, vals) in &flags {
                if &f.text[2..] == name {
                    if !vals.is_empty() {
                        return self.err(vals[0].span.at, format!("`{}` takes no value", f.text));
                    }
                    return Ok(true);
                }
            }
            Ok(false)
        };
        let one_ideal = |p: &Self| -> PResult<NamedIdeal> { p.ideal_arg(&positional[0]) };
        match head.text {
            "gb" | "hilbert" | "length" | "local-length" | "dim" | "spread" => {
                arity(1, 1)?;
                allowed(&[])?;
                let i = one_ideal(self)?;
                Ok(match head.text {
                    "gb" => Command::Gb(i),
                    "hilbert" => Command::Hilbert(i),
                    "length" => Command::Length(i),
                    "local-length" => Command::LocalLength(i),
                    "dim" => Command::Dim(i),
                    _ => Command::Spread(i),
                })
            }
            "sympow" => {
                arity(2, 2)?;
                allowed(&["components", "at", "compare"])?;
                let ideal = one_ideal(self)?;
                let exponent: u32 = self.number(positional[1].span)?;
                if exponent == 0 {
                    return self.err(positional[1].span.at, "exponent must be positive");
                }
                let comp = single("components")?;
                let at = single("at")?;
                let method = match (comp, at) {
                    (Some(c), Some(_)) => return self.err(c.span.at, "`--components` and `--at` are exclusive"),
                    (None, Some(g)) => MethodChoice::AtElement(self.poly_arg(&g)?),
                    (None, None) => MethodChoice::Auto,
                    (Some(c), None) => match c.span.text {
                        "auto" => MethodChoice::Auto,
                        "none" => MethodChoice::SaturateAtMax,
                        "declared" => {
                            if ideal.primes.is_none() {
                                return self.err(c.span.at, format!("no primes declared for `{}`", ideal.label));
                            }
                            MethodChoice::Components
                        }
                        other => {
                            return self.err(
                                c.span.at,
                                format!("`--components` is auto, none or declared, found `{other}`"),
                            )
                        }
                    },
                };
                Ok(Command::Sympow {
                    ideal,
                    exponent,
                    method,
                    compare: switch("compare")?,
                })
            }
            "member" | "radmember" => {
                arity(2, 2)?;
                allowed(&[])?;
                let poly = self.poly_arg(&positional[0])?;
                let ideal = self.ideal_arg(&positional[1])?;
                Ok(if head.text == "member" {
                    Command::Member { poly, ideal }
                } else {
                    Command::Radmember { poly, ideal }
                })
            }
            "intersect" => {
                arity(2, 2)?;
                allowed(&[])?;
                Ok(Command::Intersect(
                    self.ideal_arg(&positional[0])?,
                    self.ideal_arg(&positional[1])?,
                ))
            }
            "saturate" => {
                arity(2, 2)?;
                allowed(&[])?;
                let ideal = one_ideal(self)?;
                let t = &positional[1];
                let by = match t.kind {
                    TokKind::Bracket => SaturateBy::Poly(self.poly_arg(t)?),
                    TokKind::Paren => SaturateBy::Ideal(self.ideal_arg(t)?),
                    TokKind::Word if self.ideals.contains_key(t.span.text) => SaturateBy::Ideal(self.ideal_arg(t)?),
                    TokKind::Word => SaturateBy::Poly(self.poly_arg(t)?),
                };
                Ok(Command::Saturate { ideal, by })
            }
            "reduction" => {
                arity(2, 3)?;
                allowed(&[])?;
                let r_max = match positional.get(2) {
                    Some(t) => self.number(t.span)?,
                    None => 5,
                };
                Ok(Command::Reduction {
                    j: self.ideal_arg(&positional[0])?,
                    i: self.ideal_arg(&positional[1])?,
                    r_max,
                })
            }
            "criterion" => {
                arity(1, 1)?;
                allowed(&["x", "f", "mult"])?;
                let ideal = one_ideal(self)?;
                let mut x = Vec::new();
                let mut f = Vec::new();
                let mut multiplicities = None;
                for (flag, vals) in &flags {
                    match &flag.text[2..] {
                        "x" => {
                            if vals.is_empty() {
                                return self.err(flag.at, "`--x` needs at least one polynomial");
                            }
                            for v in vals {
                                x.push(self.poly_arg(v)?);
                            }
                        }
                        "f" => {
                            if vals.len() != 2 {
                                return self.err(flag.at, "`--f` takes a polynomial and a level");
                            }
                            let level: u32 = self.number(vals[1].span)?;
                            if level == 0 {
                                return self.err(vals[1].span.at, "level must be positive");
                            }
                            f.push((self.poly_arg(&vals[0])?, level));
                        }
                        _ => {
                            let mut ms = Vec::new();
                            for v in vals {
                                ms.push(self.number::<i64>(v.span)?);
                            }
                            multiplicities = Some(ms);
                        }
                    }
                }
                if ideal.primes.is_none() {
                    return self.err(
                        positional[0].span.at,
                        format!("`criterion` needs `primes {} = ...`", ideal.label),
                    );
                }
                Ok(Command::Criterion {
                    ideal,
                    x,
                    f,
                    multiplicities,
                })
            }
            "stci" => {
                arity(1, 1)?;
                allowed(&["f"])?;
                let ideal = one_ideal(self)?;
                let mut f = Vec::new();
                for (_, vals) in &flags {
                    for v in vals {
                        f.push(self.poly_arg(v)?);
                    }
                }
                Ok(Command::Stci { ideal, f })
            }
            "sop" => {
                arity(1, 2)?;
                allowed(&[])?;
                let ideal = one_ideal(self)?;
                if ideal.primes.is_none() {
                    return self.err(
                        positional[0].span.at,
                        format!("`sop` needs `primes {} = ...`", ideal.label),
                    );
                }
                let count = positional.get(1).map(|t| self.number(t.span)).transpose()?;
                Ok(Command::Sop { ideal, count })
            }
            "family" | "verify-paper" => {
                arity(0, 0)?;
                allowed(&["family", "n", "rational"])?;
                let fam_tok = single("family")?
                    .ok_or_else(|| self.src.diag(head.at, format!("`{}` needs `--family`", head.text)))?;
                let family = FamilyChoice::parse(fam_tok.span.text)
                    .ok_or_else(|| self.src.diag(fam_tok.span.at, "family is edge, fermat or jacobian"))?;
                let n = single("n")?.map(|t| self.number(t.span)).transpose()?;
                if head.text == "family" {
                    Ok(Command::Family {
                        family,
                        n,
                        cyclotomic: !switch("rational")?,
                    })
                } else {
                    if switch("rational")? {
                        return self.err(head.at, "`--rational` applies to `family` only");
                    }
                    Ok(Command::VerifyPaper { family, n })
                }
            }
            other => self.err(head.at, format!("unknown command `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comment_offsets() {
        let d = parse_jobfile("# note\nring Q[x] lex;\nideal a = (x, y);\n").unwrap_err();
        assert_eq!((d.line, d.column), (3, 15));
    }
}

//! The declarative spec language: a recursive-descent parser and a canonical
//! printer. Names are resolved while parsing (forward references are
//! rejected), so a parsed document is always buildable.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::catalog::{canonical_algebra_name, canonical_geometry_name, is_family_symbol, ALGEBRAS, GEOMETRY_NAMES};
use crate::contraction::{Expectation, RuleKind, Scale, Subject};
use crate::exactnum::{parse_expr, qfmt, Rational, RationalFn, Var};
use crate::geometry::SignatureDescriptor;
use crate::liefields::InvolutionKind;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("{line}:{col}: syntax error: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },
    #[error("{line}:{col}: unknown symbol {symbol:?}")]
    UnknownSymbol { line: usize, col: usize, symbol: String },
    #[error("{line}:{col}: duplicate name {name:?}")]
    DuplicateName { line: usize, col: usize, name: String },
}

/// An arithmetic expression: its whitespace-normalized source and value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub text: String,
    pub value: RationalFn,
}

/// One generator block: a (possibly negated) family symbol or inline fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Family(String),
    Inline(Vec<[Expr; 4]>),
}

impl Block {
    /// Number of vector fields the block contributes.
    pub fn len(&self) -> usize {
        match self {
            Block::Family(s) if s.trim_start_matches('-').starts_with('H') => 1,
            Block::Family(_) => 3,
            Block::Inline(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Generator blocks in slot order: time, translations, boosts, rotations.
pub const BLOCK_KEYWORDS: [&str; 4] = ["time", "trans", "boost", "rot"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDecl {
    pub name: String,
    pub blocks: [Block; 4],
}

/// Which tensor a component assignment targets.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TensorName {
    G,
    H,
    Gamma,
}

impl TensorName {
    pub fn keyword(self) -> &'static str {
        match self {
            TensorName::G => "g",
            TensorName::H => "h",
            TensorName::Gamma => "gamma",
        }
    }

    fn arity(self) -> usize {
        if self == TensorName::Gamma {
            3
        } else {
            2
        }
    }
}

/// `tensor[i][j]… = expr`, indices stored with the symmetric pair sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub tensor: TensorName,
    pub index: Vec<usize>,
    pub value: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryDecl {
    pub name: String,
    pub algebra: String,
    pub signature: Option<SignatureDescriptor>,
    /// Curvature constant as a multiple of `l⁻²`.
    pub curvature: Option<Rational>,
    pub components: Vec<Component>,
    /// `(expr, positive)` strict inequalities.
    pub domain: Vec<(Expr, bool)>,
    pub free: Vec<Expr>,
    pub kernel: Vec<[Expr; 4]>,
}

/// Prefactor slots of a recipe.
pub const SCALE_SLOTS: [&str; 7] = ["time", "trans", "boost", "rot", "g", "h", "gamma"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractDecl {
    pub source: String,
    pub target: String,
    pub subject: Subject,
    pub rule: RuleKind,
    pub pre: Option<InvolutionKind>,
    /// `(slot index into SCALE_SLOTS, scale)` in written order.
    pub scales: Vec<(usize, Scale)>,
    pub expected: Expectation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDecl {
    pub left: String,
    pub right: String,
    pub g_sign: i8,
    pub h_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Declaration {
    Algebra(AlgebraDecl),
    Geometry(GeometryDecl),
    Contract(ContractDecl),
    Dual(DualDecl),
}

impl Declaration {
    /// The name a declaration introduces, if any.
    pub fn declared_name(&self) -> Option<(&str, Subject)> {
        match self {
            Declaration::Algebra(a) => Some((&a.name, Subject::Algebra)),
            Declaration::Geometry(g) => Some((&g.name, Subject::Geometry)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecDocument {
    pub declarations: Vec<Declaration>,
}

/// Names visible to a document: the catalog plus earlier declarations.
#[derive(Clone, Debug)]
pub struct NameTable {
    names: BTreeMap<String, Subject>,
    /// Whether alias spellings of catalog names resolve.
    catalog: bool,
}

impl NameTable {
    /// No names at all: catalog entries are neither visible nor reserved.
    pub fn empty() -> NameTable {
        NameTable { names: BTreeMap::new(), catalog: false }
    }

    pub fn builtin() -> NameTable {
        let mut names = BTreeMap::new();
        for r in ALGEBRAS.iter() {
            names.insert(r.name.to_string(), Subject::Algebra);
        }
        for g in GEOMETRY_NAMES {
            names.insert(g.to_string(), Subject::Geometry);
        }
        NameTable { names, catalog: true }
    }

    /// Canonical spelling and kind of a visible name.
    pub fn resolve(&self, name: &str) -> Option<(String, Subject)> {
        if let Some(&s) = self.names.get(name) {
            return Some((name.to_string(), s));
        }
        if !self.catalog {
            return None;
        }
        if let Some(n) = canonical_algebra_name(name) {
            return Some((n.to_string(), Subject::Algebra));
        }
        canonical_geometry_name(name).map(|n| (n.to_string(), Subject::Geometry))
    }

    pub fn insert(&mut self, name: &str, subject: Subject) {
        self.names.insert(name.to_string(), subject);
    }

    /// Every visible name of one kind, in sorted order.
    pub fn of_kind(&self, subject: Subject) -> Vec<&str> {
        self.names.iter().filter(|(_, &s)| s == subject).map(|(n, _)| n.as_str()).collect()
    }
}

/// Parse against the built-in catalog names.
pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    parse_spec_with(text, &NameTable::builtin())
}

/// Parse against an arbitrary name table; the table itself is not modified.
pub fn parse_spec_with(text: &str, names: &NameTable) -> Result<SpecDocument, SpecError> {
    let mut p = Parser { src: text, pos: 0, names: names.clone() };
    let mut doc = SpecDocument::default();
    loop {
        p.skip_blank(true);
        if p.at_end() {
            return Ok(doc);
        }
        let at = p.pos;
        let kw = p.word();
        let decl = match kw {
            "algebra" => Declaration::Algebra(p.algebra()?),
            "geometry" => Declaration::Geometry(p.geometry()?),
            "contract" => Declaration::Contract(p.contract()?),
            "dual" => Declaration::Dual(p.dual()?),
            _ => return Err(p.syntax_at(at, "'algebra', 'geometry', 'contract' or 'dual'")),
        };
        if let Some((name, subject)) = decl.declared_name() {
            p.names.insert(name, subject);
        }
        doc.declarations.push(decl);
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: NameTable,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '+' | '-' | '\'' | '.')
}

impl<'a> Parser<'a> {
    fn line_col(&self, at: usize) -> (usize, usize) {
        let before = &self.src[..at.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
        (line, col)
    }

    fn syntax_at(&self, at: usize, expected: &str) -> SpecError {
        let (line, col) = self.line_col(at);
        SpecError::Syntax { line, col, expected: expected.to_string() }
    }

    fn syntax(&self, expected: &str) -> SpecError {
        self.syntax_at(self.pos, expected)
    }

    fn unknown(&self, at: usize, symbol: &str) -> SpecError {
        let (line, col) = self.line_col(at);
        SpecError::UnknownSymbol { line, col, symbol: symbol.to_string() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    /// Skip spaces and comments, and newlines when `newlines` is set.
    fn skip_blank(&mut self, newlines: bool) {
        while let Some(c) = self.peek() {
            if c == '#' {
                self.pos += self.rest().find('\n').unwrap_or(self.rest().len());
            } else if c == '\n' && !newlines {
                return;
            } else if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                return;
            }
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_blank(false);
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !is_word_char(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn name(&mut self, what: &str) -> Result<(usize, &'a str), SpecError> {
        self.skip_blank(false);
        let at = self.pos;
        let w = self.word();
        if w.is_empty() {
            return Err(self.syntax_at(at, what));
        }
        Ok((at, w))
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_blank(false);
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), SpecError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.syntax(&format!("'{}'", s)))
        }
    }

    fn keyword(&mut self, allowed: &[&str]) -> Result<(usize, &'a str), SpecError> {
        self.skip_blank(false);
        let at = self.pos;
        let w = self.word();
        if allowed.contains(&w) {
            Ok((at, w))
        } else {
            let list: Vec<String> = allowed.iter().map(|k| format!("'{}'", k)).collect();
            Err(self.syntax_at(at, &list.join(" or ")))
        }
    }

    /// A new name: must not collide with the catalog or earlier declarations.
    fn fresh_name(&mut self) -> Result<String, SpecError> {
        let (at, n) = self.name("a name")?;
        if self.names.resolve(n).is_some() {
            let (line, col) = self.line_col(at);
            return Err(SpecError::DuplicateName { line, col, name: n.to_string() });
        }
        Ok(n.to_string())
    }

    fn reference(&mut self, kind: Option<Subject>) -> Result<(String, Subject), SpecError> {
        let (at, n) = self.name("a name")?;
        match self.names.resolve(n) {
            Some((c, s)) if kind.is_none_or(|k| k == s) => Ok((c, s)),
            _ => Err(self.unknown(at, n)),
        }
    }

    /// Statement loop of a `{ … }` body; statements end at `;`, a newline or `}`.
    fn block(&mut self, mut stmt: impl FnMut(&mut Self) -> Result<(), SpecError>) -> Result<(), SpecError> {
        self.expect("{")?;
        loop {
            self.skip_blank(true);
            while self.eat(";") {
                self.skip_blank(true);
            }
            if self.eat("}") {
                return Ok(());
            }
            if self.at_end() {
                return Err(self.syntax("'}'"));
            }
            stmt(self)?;
            self.skip_blank(false);
            match self.peek() {
                Some(';') | Some('\n') => self.pos += 1,
                Some('}') => {}
                _ => return Err(self.syntax("';', newline or '}'")),
            }
        }
    }

    /// Scan an expression up to a terminator at nesting depth zero.
    fn expr(&mut self, stop: &[char]) -> Result<Expr, SpecError> {
        self.skip_blank(false);
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            if depth == 0 && (stop.contains(&c) || matches!(c, ';' | '\n' | '}' | '#')) {
                break;
            }
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                '\n' | '#' | ';' => break,
                _ => {}
            }
            self.pos += c.len_utf8();
        }
        let raw = &self.src[start..self.pos];
        let lead = raw.len() - raw.trim_start().len();
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            return Err(self.syntax_at(start, "an expression"));
        }
        let value = parse_expr(trimmed).map_err(|e| {
            let (line, col) = self.line_col(start + lead + e.offset);
            SpecError::Syntax { line, col, expected: e.message.trim_start_matches("expected ").to_string() }
        })?;
        if !value.free_of(Var::Eps) {
            let off = trimmed.find("eps").unwrap_or(0);
            return Err(self.unknown(start + lead + off, "eps"));
        }
        Ok(Expr { text: trimmed.split_whitespace().collect::<Vec<_>>().join(" "), value })
    }

    /// `expr(a, b, c, d)`.
    fn inline_field(&mut self, polynomial: bool) -> Result<[Expr; 4], SpecError> {
        self.expect("expr")?;
        self.expect("(")?;
        let mut out = Vec::with_capacity(4);
        for k in 0..4 {
            self.skip_blank(false);
            let at = self.pos;
            let e = self.expr(&[','])?;
            if polynomial && !e.value.is_polynomial() {
                return Err(self.syntax_at(at, "a polynomial component"));
            }
            out.push(e);
            self.expect(if k < 3 { "," } else { ")" })?;
        }
        Ok(out.try_into().expect("four components"))
    }

    fn generator_block(&mut self, slot: usize) -> Result<Block, SpecError> {
        self.skip_blank(false);
        let at = self.pos;
        let want = if slot == 0 { 1 } else { 3 };
        let block = if self.rest().starts_with("expr") && self.rest()[4..].trim_start().starts_with('(') {
            let mut fields = vec![self.inline_field(true)?];
            while self.eat(",") {
                fields.push(self.inline_field(true)?);
            }
            Block::Inline(fields)
        } else {
            let (at, sym) = self.name("a generator symbol or expr(...)")?;
            if !is_family_symbol(sym) {
                return Err(self.unknown(at, sym));
            }
            Block::Family(sym.to_string())
        };
        if block.len() != want {
            return Err(self.syntax_at(at, &format!("{} generator field(s) for '{}'", want, BLOCK_KEYWORDS[slot])));
        }
        Ok(block)
    }

    fn algebra(&mut self) -> Result<AlgebraDecl, SpecError> {
        let name = self.fresh_name()?;
        let mut blocks: [Option<Block>; 4] = Default::default();
        let open = self.pos;
        self.block(|p| {
            let (at, kw) = p.keyword(&BLOCK_KEYWORDS)?;
            let slot = BLOCK_KEYWORDS.iter().position(|k| *k == kw).expect("keyword");
            if blocks[slot].is_some() {
                return Err(p.syntax_at(at, &format!("a single '{}' statement", kw)));
            }
            blocks[slot] = Some(p.generator_block(slot)?);
            Ok(())
        })?;
        if let Some(missing) = blocks.iter().position(Option::is_none) {
            return Err(self.syntax_at(open, &format!("a '{}' statement", BLOCK_KEYWORDS[missing])));
        }
        Ok(AlgebraDecl { name, blocks: blocks.map(|b| b.expect("checked")) })
    }

    fn index(&mut self) -> Result<usize, SpecError> {
        self.expect("[")?;
        self.skip_blank(false);
        let at = self.pos;
        let d = match self.peek() {
            Some(c @ '0'..='3') => c as usize - '0' as usize,
            _ => return Err(self.syntax_at(at, "an index 0..3")),
        };
        self.pos += 1;
        self.expect("]")?;
        Ok(d)
    }

    fn geometry(&mut self) -> Result<GeometryDecl, SpecError> {
        let name = self.fresh_name()?;
        let mut decl = GeometryDecl {
            name,
            algebra: String::new(),
            signature: None,
            curvature: None,
            components: vec![],
            domain: vec![],
            free: vec![],
            kernel: vec![],
        };
        let open = self.pos;
        self.block(|p| {
            let (at, kw) = p.keyword(&["algebra", "signature", "curvature", "g", "h", "gamma", "domain", "free", "kernel"])?;
            match kw {
                "algebra" => {
                    if !decl.algebra.is_empty() {
                        return Err(p.syntax_at(at, "a single 'algebra' statement"));
                    }
                    decl.algebra = p.reference(Some(Subject::Algebra))?.0;
                }
                "signature" => {
                    p.skip_blank(false);
                    let s = p.pos;
                    let len = p.rest().find(')').map_or(0, |i| i + 1);
                    let lit = &p.src[s..s + len];
                    p.pos += len;
                    decl.signature = Some(
                        SignatureDescriptor::parse(lit).ok_or_else(|| p.syntax_at(s, "a signature like (+,-,-,-) or (-;+,+,+)"))?,
                    );
                }
                "curvature" => {
                    p.skip_blank(false);
                    let s = p.pos;
                    let e = p.expr(&[])?;
                    decl.curvature = Some(e.value.as_constant().ok_or_else(|| p.syntax_at(s, "a rational constant"))?);
                }
                "g" | "h" | "gamma" => {
                    let tensor = match kw {
                        "g" => TensorName::G,
                        "h" => TensorName::H,
                        _ => TensorName::Gamma,
                    };
                    let mut index = Vec::with_capacity(3);
                    for _ in 0..tensor.arity() {
                        index.push(p.index()?);
                    }
                    let n = index.len();
                    if index[n - 2] > index[n - 1] {
                        index.swap(n - 2, n - 1);
                    }
                    if decl.components.iter().any(|c| c.tensor == tensor && c.index == index) {
                        return Err(p.syntax_at(at, "each component assigned once"));
                    }
                    p.expect("=")?;
                    let value = p.expr(&[])?;
                    decl.components.push(Component { tensor, index, value });
                }
                "domain" => {
                    let e = p.expr(&['>', '<'])?;
                    let positive = if p.eat(">") {
                        true
                    } else if p.eat("<") {
                        false
                    } else {
                        return Err(p.syntax("'>' or '<'"));
                    };
                    p.expect("0")?;
                    decl.domain.push((e, positive));
                }
                "free" => decl.free.push(p.expr(&[])?),
                _ => decl.kernel.push(p.inline_field(true)?),
            }
            Ok(())
        })?;
        if decl.algebra.is_empty() {
            return Err(self.syntax_at(open, "an 'algebra' statement"));
        }
        Ok(decl)
    }

    fn scale(&mut self) -> Result<Scale, SpecError> {
        self.skip_blank(false);
        let at = self.pos;
        let sign = if self.eat("-") { -1 } else { 1 };
        if self.eat("eps") {
            if !self.eat("^") {
                return Ok(Scale::new(sign, 1));
            }
            self.skip_blank(false);
            let s = self.pos;
            let neg = self.eat("-");
            let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
            let k: i32 = self.rest()[..digits].parse().map_err(|_| self.syntax_at(s, "an integer exponent"))?;
            self.pos += digits;
            Ok(Scale::new(sign, if neg { -k } else { k }))
        } else if self.eat("1") {
            Ok(Scale::new(sign, 0))
        } else {
            Err(self.syntax_at(at, "'eps^k', '-eps^k' or '1'"))
        }
    }

    fn contract(&mut self) -> Result<ContractDecl, SpecError> {
        let (source, subject) = self.reference(None)?;
        self.expect("->")?;
        let (target, _) = self.reference(Some(subject))?;
        let mut decl = ContractDecl {
            source,
            target,
            subject,
            rule: RuleKind::LToInf,
            pre: None,
            scales: vec![],
            expected: Expectation::Contracts,
        };
        let mut rule = None;
        let open = self.pos;
        self.block(|p| {
            let (at, kw) = p.keyword(&["rule", "scale", "expect", "pre"])?;
            match kw {
                "rule" => {
                    let (at, r) = p.name("a rule name")?;
                    rule = Some(RuleKind::parse(r).ok_or_else(|| p.unknown(at, r))?);
                }
                "scale" => {
                    let (at, slot) = p.keyword(&SCALE_SLOTS)?;
                    let k = SCALE_SLOTS.iter().position(|s| *s == slot).expect("slot");
                    let tensor_slot = k >= 4;
                    if tensor_slot != (decl.subject == Subject::Geometry) {
                        return Err(p.syntax_at(at, "a scale slot matching the subject"));
                    }
                    if decl.scales.iter().any(|(s, _)| *s == k) {
                        return Err(p.syntax_at(at, "each scale assigned once"));
                    }
                    p.expect("=")?;
                    decl.scales.push((k, p.scale()?));
                }
                "expect" => {
                    let (_, e) = p.keyword(&["contracts", "blocked"])?;
                    decl.expected = if e == "contracts" { Expectation::Contracts } else { Expectation::NotContractible };
                }
                _ => {
                    if decl.subject != Subject::Algebra {
                        return Err(p.syntax_at(at, "'pre' only on algebra recipes"));
                    }
                    let (_, w) = p.keyword(&["theta", "pi", "thetapi"])?;
                    decl.pre = Some(match w {
                        "theta" => InvolutionKind::TimeReversal,
                        "pi" => InvolutionKind::Parity,
                        _ => InvolutionKind::Composite,
                    });
                }
            }
            Ok(())
        })?;
        decl.rule = rule.ok_or_else(|| self.syntax_at(open, "a 'rule' statement"))?;
        if decl.subject == Subject::Algebra && decl.expected == Expectation::NotContractible {
            return Err(self.syntax_at(open, "'expect contracts' for algebra recipes"));
        }
        Ok(decl)
    }

    fn dual(&mut self) -> Result<DualDecl, SpecError> {
        let (left, _) = self.reference(Some(Subject::Geometry))?;
        self.expect("<->")?;
        let (right, _) = self.reference(Some(Subject::Geometry))?;
        let mut decl = DualDecl { left, right, g_sign: 1, h_sign: 1 };
        loop {
            self.skip_blank(false);
            if !self.rest().starts_with("sign") {
                break;
            }
            self.pos += 4;
            let (at, t) = self.keyword(&["g", "h"])?;
            self.expect("=")?;
            self.expect("-1")?;
            let slot = if t == "g" { &mut decl.g_sign } else { &mut decl.h_sign };
            if *slot < 0 {
                return Err(self.syntax_at(at, "each sign given once"));
            }
            *slot = -1;
        }
        self.skip_blank(false);
        match self.peek() {
            None => Ok(decl),
            Some(';') | Some('\n') => {
                self.pos += 1;
                Ok(decl)
            }
            _ => Err(self.syntax("'sign', ';' or newline")),
        }
    }
}

fn involution_word(k: InvolutionKind) -> &'static str {
    match k {
        InvolutionKind::TimeReversal => "theta",
        InvolutionKind::Parity => "pi",
        InvolutionKind::Composite => "thetapi",
        InvolutionKind::Identity => "identity",
    }
}

fn scale_text(s: Scale) -> String {
    let sign = if s.sign < 0 { "-" } else { "" };
    if s.order == 0 {
        format!("{}1", sign)
    } else {
        format!("{}eps^{}", sign, s.order)
    }
}

fn field_text(f: &[Expr; 4]) -> String {
    format!("expr({}, {}, {}, {})", f[0].text, f[1].text, f[2].text, f[3].text)
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Family(s) => f.write_str(s),
            Block::Inline(v) => f.write_str(&v.iter().map(field_text).collect::<Vec<_>>().join(", ")),
        }
    }
}

impl fmt::Display for Declaration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Declaration::Algebra(a) => {
                writeln!(f, "algebra {} {{", a.name)?;
                for (kw, b) in BLOCK_KEYWORDS.iter().zip(&a.blocks) {
                    writeln!(f, "  {} {};", kw, b)?;
                }
                writeln!(f, "}}")
            }
            Declaration::Geometry(g) => {
                writeln!(f, "geometry {} {{", g.name)?;
                writeln!(f, "  algebra {};", g.algebra)?;
                if let Some(s) = &g.signature {
                    writeln!(f, "  signature {};", s)?;
                }
                if let Some(k) = &g.curvature {
                    writeln!(f, "  curvature {};", qfmt(k))?;
                }
                for c in &g.components {
                    let idx: String = c.index.iter().map(|i| format!("[{}]", i)).collect();
                    writeln!(f, "  {}{} = {};", c.tensor.keyword(), idx, c.value.text)?;
                }
                for (e, pos) in &g.domain {
                    writeln!(f, "  domain {} {} 0;", e.text, if *pos { ">" } else { "<" })?;
                }
                for e in &g.free {
                    writeln!(f, "  free {};", e.text)?;
                }
                for k in &g.kernel {
                    writeln!(f, "  kernel {};", field_text(k))?;
                }
                writeln!(f, "}}")
            }
            Declaration::Contract(c) => {
                writeln!(f, "contract {} -> {} {{", c.source, c.target)?;
                writeln!(f, "  rule {};", c.rule)?;
                if let Some(p) = c.pre {
                    writeln!(f, "  pre {};", involution_word(p))?;
                }
                for (k, s) in &c.scales {
                    writeln!(f, "  scale {} = {};", SCALE_SLOTS[*k], scale_text(*s))?;
                }
                let e = if c.expected == Expectation::Contracts { "contracts" } else { "blocked" };
                writeln!(f, "  expect {};", e)?;
                writeln!(f, "}}")
            }
            Declaration::Dual(d) => {
                write!(f, "dual {} <-> {}", d.left, d.right)?;
                if d.g_sign < 0 {
                    f.write_str(" sign g=-1")?;
                }
                if d.h_sign < 0 {
                    f.write_str(" sign h=-1")?;
                }
                writeln!(f, ";")
            }
        }
    }
}

/// Canonical text; parsing it yields an equal document.
impl fmt::Display for SpecDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.declarations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", d)?;
        }
        Ok(())
    }
}

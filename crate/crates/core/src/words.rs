//! Symbols, words over the tagged alphabet, and the word orders used to
//! orient rules.
//!
//! Every alphabet carries the two tag symbols `H` and `K` at fixed indices
//! ahead of the group generators. A [`Word`] is a flat symbol sequence in
//! which `H` may only appear first and `K` only last, so factor matching on
//! the flat sequence is automatically anchored at the tagged ends.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Reserved token for the empty word.
pub const EMPTY_WORD: &str = "id";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown symbol in `{0}`")]
    UnknownSymbol(String),
    #[error("`{0}` is reserved and cannot name a generator")]
    ReservedName(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("tag symbol in an illegal position in `{0}`")]
    MisplacedTag(String),
    #[error("tag symbol not allowed in `{0}`")]
    UnexpectedTag(String),
    #[error("order does not cover symbol `{0}`")]
    MissingFromOrder(String),
    #[error("symbol `{0}` listed twice in order")]
    DuplicateInOrder(String),
    #[error("malformed order `{0}`")]
    MalformedOrder(String),
}

/// Index of a symbol in its [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u16);

impl Symbol {
    pub const H: Symbol = Symbol(0);
    pub const K: Symbol = Symbol(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Symbol {
        Symbol(i as u16)
    }

    pub fn is_tag(self) -> bool {
        self.0 < 2
    }
}

/// Tag symbols plus the generators `X_G`, with an optional inverse pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, Symbol>,
    inverses: Vec<Option<Symbol>>,
}

fn is_reserved(name: &str) -> bool {
    matches!(name, "H" | "K" | EMPTY_WORD | "1" | "0")
}

impl Alphabet {
    pub fn new<I, S>(generators: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet {
            names: vec!["H".to_string(), "K".to_string()],
            lookup: HashMap::new(),
            inverses: vec![None, None],
        };
        alphabet.lookup.insert("H".into(), Symbol::H);
        alphabet.lookup.insert("K".into(), Symbol::K);
        for g in generators {
            let g = g.into();
            if is_reserved(&g)
                || g.is_empty()
                || g.chars().any(|c| c.is_whitespace() || "#,;()+*^-<>=:.".contains(c))
            {
                return Err(WordError::ReservedName(g));
            }
            if alphabet.lookup.contains_key(&g) {
                return Err(WordError::DuplicateGenerator(g));
            }
            let sym = Symbol(alphabet.names.len() as u16);
            alphabet.lookup.insert(g.clone(), sym);
            alphabet.names.push(g);
            alphabet.inverses.push(None);
        }
        Ok(alphabet)
    }

    /// Number of symbols including the two tags.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.len() == 2
    }

    pub fn generator_count(&self) -> usize {
        self.names.len() - 2
    }

    pub fn generators(&self) -> impl Iterator<Item = Symbol> + '_ {
        (2..self.names.len()).map(Symbol::from_index)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(Symbol::from_index)
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names[2..]
    }

    pub fn set_inverse(&mut self, a: Symbol, b: Symbol) {
        self.inverses[a.index()] = Some(b);
        self.inverses[b.index()] = Some(a);
    }

    pub fn inverse(&self, s: Symbol) -> Option<Symbol> {
        self.inverses[s.index()]
    }

    pub fn has_inverses(&self) -> bool {
        self.generators().all(|g| self.inverse(g).is_some())
    }

    /// Formal inverse of an untagged word, if every letter has an inverse.
    pub fn invert_word(&self, w: &Word) -> Option<Word> {
        let mut out = Vec::with_capacity(w.len());
        for &s in w.symbols().iter().rev() {
            out.push(self.inverse(s)?);
        }
        Some(Word(out))
    }

    fn split_token(&self, token: &str, out: &mut Vec<Symbol>) -> Result<(), WordError> {
        if token == EMPTY_WORD {
            return Ok(());
        }
        if let Some(s) = self.symbol(token) {
            out.push(s);
            return Ok(());
        }
        // juxtaposed single-token symbols, longest match first
        let mut rest = token;
        while !rest.is_empty() {
            let mut best: Option<(usize, Symbol)> = None;
            for (i, name) in self.names.iter().enumerate() {
                if rest.starts_with(name.as_str()) && best.is_none_or(|(l, _)| name.len() > l) {
                    best = Some((name.len(), Symbol::from_index(i)));
                }
            }
            match best {
                Some((l, s)) => {
                    out.push(s);
                    rest = &rest[l..];
                }
                None => return Err(WordError::UnknownSymbol(token.to_string())),
            }
        }
        Ok(())
    }

    /// Parses a word literal. Tags are accepted at the ends only.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let mut syms = Vec::new();
        for token in text.split_whitespace() {
            self.split_token(token, &mut syms)?;
        }
        Word::new(syms).map_err(|_| WordError::MisplacedTag(text.trim().to_string()))
    }

    /// Parses a word literal that must not contain tags.
    pub fn parse_body(&self, text: &str) -> Result<Word, WordError> {
        let w = self.parse_word(text)?;
        if w.tags() != Tags::NONE {
            return Err(WordError::UnexpectedTag(text.trim().to_string()));
        }
        Ok(w)
    }

    /// Space-separated rendering; the empty word is `id`.
    pub fn render(&self, w: &Word) -> String {
        self.render_symbols(w.symbols())
    }

    pub fn render_symbols(&self, syms: &[Symbol]) -> String {
        if syms.is_empty() {
            return EMPTY_WORD.to_string();
        }
        let parts: Vec<&str> = syms.iter().map(|&s| self.name(s)).collect();
        parts.join(" ")
    }

    /// Juxtaposed rendering with powers collapsed, e.g. `H a^4 K` as `Ha^4K`.
    pub fn render_compact(&self, w: &Word) -> String {
        let syms = w.symbols();
        if syms.is_empty() {
            return EMPTY_WORD.to_string();
        }
        let sep = if self.names.iter().any(|n| n.len() > 1) { " " } else { "" };
        let mut parts = Vec::new();
        let mut i = 0;
        while i < syms.len() {
            let mut j = i;
            while j < syms.len() && syms[j] == syms[i] {
                j += 1;
            }
            let name = self.name(syms[i]);
            if j - i > 1 {
                parts.push(format!("{}^{}", name, j - i));
            } else {
                parts.push(name.to_string());
            }
            i = j;
        }
        parts.join(sep)
    }
}

/// Which tags a word carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tags {
    pub left: bool,
    pub right: bool,
}

impl Tags {
    pub const NONE: Tags = Tags { left: false, right: false };
    pub const BOTH: Tags = Tags { left: true, right: true };
}

/// Partition class of a rule: `R_G`, `R_H`, `R_K` or `R_HK`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TagClass {
    G,
    H,
    K,
    HK,
}

impl From<Tags> for TagClass {
    fn from(t: Tags) -> Self {
        match (t.left, t.right) {
            (false, false) => TagClass::G,
            (true, false) => TagClass::H,
            (false, true) => TagClass::K,
            (true, true) => TagClass::HK,
        }
    }
}

/// A word over the tagged alphabet. `H` can only be the first symbol and
/// `K` only the last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

fn well_formed(syms: &[Symbol]) -> bool {
    syms.iter().enumerate().all(|(i, &s)| match s {
        Symbol::H => i == 0,
        Symbol::K => i + 1 == syms.len(),
        _ => true,
    })
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(syms: Vec<Symbol>) -> Result<Word, Vec<Symbol>> {
        if well_formed(&syms) {
            Ok(Word(syms))
        } else {
            Err(syms)
        }
    }

    pub(crate) fn from_vec_unchecked(syms: Vec<Symbol>) -> Word {
        debug_assert!(well_formed(&syms));
        Word(syms)
    }

    /// `H? body K?`; panics if `body` itself carries tags.
    pub fn tagged(left: bool, body: &Word, right: bool) -> Word {
        assert_eq!(body.tags(), Tags::NONE, "body must be untagged");
        let mut v = Vec::with_capacity(body.len() + 2);
        if left {
            v.push(Symbol::H);
        }
        v.extend_from_slice(&body.0);
        if right {
            v.push(Symbol::K);
        }
        Word(v)
    }

    /// `H w K`, a member of the set `T`.
    pub fn in_t(body: &Word) -> Word {
        Word::tagged(true, body, true)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tags(&self) -> Tags {
        Tags {
            left: self.0.first() == Some(&Symbol::H),
            right: self.0.last() == Some(&Symbol::K),
        }
    }

    pub fn tag_class(&self) -> TagClass {
        self.tags().into()
    }

    pub fn is_in_t(&self) -> bool {
        self.tags() == Tags::BOTH
    }

    /// The word with its tags stripped.
    pub fn body(&self) -> &[Symbol] {
        let t = self.tags();
        let start = usize::from(t.left);
        let end = self.0.len() - usize::from(t.right);
        if start > end {
            &[]
        } else {
            &self.0[start..end]
        }
    }

    pub fn body_word(&self) -> Word {
        Word(self.body().to_vec())
    }

    /// Concatenation, failing if a tag would end up inside the result.
    pub fn concat(&self, other: &Word) -> Option<Word> {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word::new(v).ok()
    }

    /// `u · m · v` for whiskering.
    pub fn whiskered(u: &Word, m: &Word, v: &Word) -> Option<Word> {
        let mut s = Vec::with_capacity(u.len() + m.len() + v.len());
        s.extend_from_slice(&u.0);
        s.extend_from_slice(&m.0);
        s.extend_from_slice(&v.0);
        Word::new(s).ok()
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn contains_factor(&self, f: &Word) -> bool {
        find_factor_occurrences(self, f).next().is_some()
    }

    /// Replaces the factor `[pos, pos+len)` with `with`.
    pub(crate) fn replace(&self, pos: usize, len: usize, with: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + with.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&with.0);
        v.extend_from_slice(&self.0[pos + len..]);
        Word::from_vec_unchecked(v)
    }

    pub fn starts_with_at(&self, pos: usize, f: &Word) -> bool {
        self.0.len() >= pos + f.len() && self.0[pos..pos + f.len()] == f.0[..]
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word::new(v).expect("tag symbol inside word")
    }
}

/// Every position where `f` occurs as a factor of `w`. A left-tagged
/// pattern can only match at position 0 and a right-tagged one only at the
/// right end, since tags never occur internally.
pub fn find_factor_occurrences<'a>(w: &'a Word, f: &'a Word) -> impl Iterator<Item = usize> + 'a {
    let n = w.len();
    let m = f.len();
    let last = if m <= n { n - m + 1 } else { 0 };
    (0..last).filter(move |&i| w.0[i..i + m] == f.0[..])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Shortlex,
    Wreath,
}

/// A well-ordering on words compatible with concatenation.
///
/// `levels` lists symbols from the greatest downwards; each inner group
/// shares one wreath level and is itself listed in descending precedence.
/// For shortlex the grouping only affects rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpec {
    kind: OrderKind,
    levels: Vec<Vec<Symbol>>,
    rank: Vec<u32>,
    level: Vec<u32>,
}

impl OrderSpec {
    /// Shortlex with `ascending` listing generators from smallest to
    /// largest. Tags not listed are placed above everything, `K > H`.
    pub fn shortlex(alphabet: &Alphabet, ascending: &[Symbol]) -> Result<Self, WordError> {
        let levels = ascending.iter().rev().map(|&s| vec![s]).collect();
        Self::build(alphabet, OrderKind::Shortlex, levels)
    }

    /// Wreath-product order; `descending` groups symbols by level from the
    /// top. Missing tags default to the two highest levels, `K > H`.
    pub fn wreath(alphabet: &Alphabet, descending: Vec<Vec<Symbol>>) -> Result<Self, WordError> {
        Self::build(alphabet, OrderKind::Wreath, descending)
    }

    /// Shortlex following the alphabet's declaration order.
    pub fn default_for(alphabet: &Alphabet) -> Self {
        let asc: Vec<Symbol> = alphabet.generators().collect();
        Self::shortlex(alphabet, &asc).expect("declaration order covers alphabet")
    }

    fn build(alphabet: &Alphabet, kind: OrderKind, mut levels: Vec<Vec<Symbol>>) -> Result<Self, WordError> {
        let listed: Vec<Symbol> = levels.iter().flatten().copied().collect();
        let has = |s: Symbol| listed.contains(&s);
        match (has(Symbol::H), has(Symbol::K)) {
            (false, false) => {
                levels.insert(0, vec![Symbol::H]);
                levels.insert(0, vec![Symbol::K]);
            }
            (true, true) => {}
            (true, false) => return Err(WordError::MissingFromOrder("K".into())),
            (false, true) => return Err(WordError::MissingFromOrder("H".into())),
        }
        let n = alphabet.len();
        let mut rank = vec![u32::MAX; n];
        let mut level = vec![u32::MAX; n];
        let total: usize = levels.iter().map(Vec::len).sum();
        let mut next_rank = total as u32;
        let depth = levels.len() as u32;
        for (li, group) in levels.iter().enumerate() {
            for &s in group {
                if s.index() >= n {
                    return Err(WordError::UnknownSymbol(format!("#{}", s.index())));
                }
                if rank[s.index()] != u32::MAX {
                    return Err(WordError::DuplicateInOrder(alphabet.name(s).to_string()));
                }
                next_rank -= 1;
                rank[s.index()] = next_rank;
                level[s.index()] = depth - li as u32;
            }
        }
        if let Some(missing) = alphabet.symbols().find(|s| rank[s.index()] == u32::MAX) {
            return Err(WordError::MissingFromOrder(alphabet.name(missing).to_string()));
        }
        Ok(OrderSpec { kind, levels, rank, level })
    }

    /// Parses `shortlex a < A < b < B` or `wreath K > H > X > x > Y > y`.
    /// Either direction of chain is accepted; within a `>`-chain,
    /// whitespace-separated symbols in one link share a wreath level.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, WordError> {
        let text = text.trim();
        let (kind, rest) = if let Some(r) = text.strip_prefix("shortlex") {
            (OrderKind::Shortlex, r)
        } else if let Some(r) = text.strip_prefix("wreath") {
            (OrderKind::Wreath, r)
        } else {
            return Err(WordError::MalformedOrder(text.to_string()));
        };
        let rest = rest.trim();
        let ascending = rest.contains('<');
        if ascending && rest.contains('>') {
            return Err(WordError::MalformedOrder(text.to_string()));
        }
        let sep = if ascending { '<' } else { '>' };
        let mut groups: Vec<Vec<Symbol>> = Vec::new();
        for link in rest.split(sep) {
            let mut g = Vec::new();
            for tok in link.split_whitespace() {
                g.push(alphabet.symbol(tok).ok_or_else(|| WordError::UnknownSymbol(tok.to_string()))?);
            }
            if g.is_empty() {
                return Err(WordError::MalformedOrder(text.to_string()));
            }
            if ascending {
                g.reverse();
            }
            groups.push(g);
        }
        if ascending {
            groups.reverse();
        }
        match kind {
            OrderKind::Shortlex => {
                let flat: Vec<Vec<Symbol>> = groups.into_iter().flatten().map(|s| vec![s]).collect();
                Self::build(alphabet, kind, flat)
            }
            OrderKind::Wreath => Self::build(alphabet, kind, groups),
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self.kind {
            OrderKind::Shortlex => {
                let asc: Vec<&str> = self
                    .levels
                    .iter()
                    .rev()
                    .flatten()
                    .filter(|s| !s.is_tag())
                    .map(|&s| alphabet.name(s))
                    .collect();
                format!("shortlex {}", asc.join(" < "))
            }
            OrderKind::Wreath => {
                let desc: Vec<String> = self
                    .levels
                    .iter()
                    .map(|g| g.iter().map(|&s| alphabet.name(s)).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("wreath {}", desc.join(" > "))
            }
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn covers(&self, s: Symbol) -> bool {
        s.index() < self.rank.len()
    }

    /// Compares two words. Panics on a symbol outside the order's alphabet;
    /// see [`OrderSpec::try_compare`].
    pub fn compare(&self, a: &[Symbol], b: &[Symbol]) -> Ordering {
        match self.kind {
            OrderKind::Shortlex => self.shortlex_cmp(a, b),
            OrderKind::Wreath => self.wreath_cmp(a, b),
        }
    }

    pub fn try_compare(&self, a: &Word, b: &Word, alphabet: &Alphabet) -> Result<Ordering, WordError> {
        for &s in a.symbols().iter().chain(b.symbols()) {
            if !self.covers(s) {
                let name = if s.index() < alphabet.len() {
                    alphabet.name(s).to_string()
                } else {
                    format!("#{}", s.index())
                };
                return Err(WordError::MissingFromOrder(name));
            }
        }
        Ok(self.compare(a.symbols(), b.symbols()))
    }

    pub fn compare_words(&self, a: &Word, b: &Word) -> Ordering {
        self.compare(a.symbols(), b.symbols())
    }

    fn lex_cmp<'a, I: Iterator<Item = &'a Symbol>>(&self, a: I, b: I) -> Ordering {
        for (x, y) in a.zip(b) {
            match self.rank[x.index()].cmp(&self.rank[y.index()]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn shortlex_cmp(&self, a: &[Symbol], b: &[Symbol]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| self.lex_cmp(a.iter(), b.iter()))
    }

    fn wreath_cmp(&self, a: &[Symbol], b: &[Symbol]) -> Ordering {
        let top = a.iter().chain(b).map(|s| self.level[s.index()]).max();
        let Some(top) = top else {
            return Ordering::Equal;
        };
        let at_top = |s: &&Symbol| self.level[s.index()] == top;
        let na = a.iter().filter(at_top).count();
        let nb = b.iter().filter(at_top).count();
        let proj = na
            .cmp(&nb)
            .then_with(|| self.lex_cmp(a.iter().filter(at_top), b.iter().filter(at_top)));
        if proj != Ordering::Equal {
            return proj;
        }
        let split = |w: &[Symbol]| -> Vec<(usize, usize)> {
            let mut segs = Vec::new();
            let mut start = 0;
            for (i, s) in w.iter().enumerate() {
                if self.level[s.index()] == top {
                    segs.push((start, i));
                    start = i + 1;
                }
            }
            segs.push((start, w.len()));
            segs
        };
        for ((sa, ea), (sb, eb)) in split(a).into_iter().zip(split(b)) {
            match self.wreath_cmp(&a[sa..ea], &b[sb..eb]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn trefoil() -> Alphabet {
        Alphabet::new(["x", "X", "y", "Y"]).unwrap()
    }

    #[test]
    fn shortlex_length_dominates() {
        let al = abc();
        let ord = OrderSpec::parse(&al, "shortlex a < b").unwrap();
        let ab = al.parse_word("ab").unwrap();
        let b = al.parse_word("b").unwrap();
        assert_eq!(ord.compare_words(&ab, &b), Ordering::Greater);
        assert_eq!(ord.compare_words(&b, &al.parse_word("a").unwrap()), Ordering::Greater);
    }

    #[test]
    fn wreath_orients_trefoil_rules() {
        let al = trefoil();
        let ord = OrderSpec::parse(&al, "wreath X > x > Y > y").unwrap();
        let w = |s: &str| al.parse_word(s).unwrap();
        assert_eq!(ord.compare_words(&w("X"), &w("xxYY")), Ordering::Greater);
        assert_eq!(ord.compare_words(&w("Yx"), &w("yxYY")), Ordering::Greater);
        assert_eq!(ord.compare_words(&w("yyx"), &w("xyy")), Ordering::Greater);
        assert_eq!(ord.compare_words(&w("xxx"), &w("yy")), Ordering::Greater);
    }

    #[test]
    fn wreath_with_tags_orients_beta_rules() {
        let al = trefoil();
        let ord = OrderSpec::parse(&al, "wreath K > H > X > x > Y > y").unwrap();
        let w = |s: &str| al.parse_word(s).unwrap();
        assert_eq!(ord.compare_words(&w("Hyy"), &w("H")), Ordering::Greater);
        assert_eq!(ord.compare_words(&w("HY"), &w("Hy")), Ordering::Greater);
        assert_eq!(ord.compare_words(&w("YK"), &w("K")), Ordering::Greater);
    }

    #[test]
    fn default_tags_sit_above_generators() {
        let al = trefoil();
        let ord = OrderSpec::parse(&al, "wreath X > x > Y > y").unwrap();
        assert_eq!(ord.render(&al), "wreath K > H > X > x > Y > y");
        let sl = OrderSpec::parse(&al, "shortlex x < X < y < Y").unwrap();
        assert_eq!(sl.render(&al), "shortlex x < X < y < Y");
    }

    #[test]
    fn order_errors() {
        let al = trefoil();
        assert!(matches!(OrderSpec::parse(&al, "wreath X > x > Y"), Err(WordError::MissingFromOrder(_))));
        assert!(matches!(OrderSpec::parse(&al, "shortlex x < x < X < y < Y"), Err(WordError::DuplicateInOrder(_))));
        assert!(matches!(OrderSpec::parse(&al, "lex x < X"), Err(WordError::MalformedOrder(_))));
        assert!(matches!(OrderSpec::parse(&al, "shortlex x < q"), Err(WordError::UnknownSymbol(_))));
        let other = Alphabet::new(["x", "X", "y", "Y", "z"]).unwrap();
        let ord = OrderSpec::parse(&al, "shortlex x < X < y < Y").unwrap();
        let z = other.parse_word("z").unwrap();
        assert!(ord.try_compare(&z, &Word::empty(), &other).is_err());
    }

    #[test]
    fn factor_occurrences_respect_tags() {
        let al = abc();
        let w = |s: &str| al.parse_word(s).unwrap();
        let hits: Vec<usize> = find_factor_occurrences(&w("HaaK"), &w("Ha")).collect();
        assert_eq!(hits, vec![0]);
        let hits: Vec<usize> = find_factor_occurrences(&w("aaa"), &w("aa")).collect();
        assert_eq!(hits, vec![0, 1]);
        let hits: Vec<usize> = find_factor_occurrences(&w("HabK"), &w("bK")).collect();
        assert_eq!(hits, vec![2]);
        let hits: Vec<usize> = find_factor_occurrences(&w("ab"), &w("abab")).collect();
        assert!(hits.is_empty());
    }

    #[test]
    fn word_literals() {
        let al = Alphabet::new(["a", "A", "b", "B"]).unwrap();
        assert_eq!(al.parse_word("id").unwrap(), Word::empty());
        assert_eq!(al.parse_word("A a").unwrap(), al.parse_word("Aa").unwrap());
        assert!(al.parse_word("aHa").is_err());
        assert!(al.parse_word("c").is_err());
        assert!(al.parse_body("H a").is_err());
        let w = al.parse_word("H a a a a K").unwrap();
        assert_eq!(al.render(&w), "H a a a a K");
        assert_eq!(al.render_compact(&w), "Ha^4K");
        assert_eq!(w.body().len(), 4);
        assert!(w.is_in_t());
    }

    #[test]
    fn reserved_generator_names() {
        assert!(Alphabet::new(["H"]).is_err());
        assert!(Alphabet::new(["id"]).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
    }
}

use std::fmt;

use super::{AutomatonError, Dfa, Nfa};

/// Regular expressions over named symbols. Build with the smart
/// constructors, which apply the obvious identities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Sym(String),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn sym(name: impl Into<String>) -> Regex {
        Regex::Sym(name.into())
    }

    pub fn union(a: Regex, b: Regex) -> Regex {
        match (a, b) {
            (Regex::Empty, r) | (r, Regex::Empty) => r,
            (a, b) if a == b => a,
            (Regex::Epsilon, Regex::Star(r)) | (Regex::Star(r), Regex::Epsilon) => Regex::Star(r),
            (a, b) => Regex::Union(Box::new(a), Box::new(b)),
        }
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        match (a, b) {
            (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
            (Regex::Epsilon, r) | (r, Regex::Epsilon) => r,
            (a, b) => Regex::Concat(Box::new(a), Box::new(b)),
        }
    }

    pub fn star(a: Regex) -> Regex {
        match a {
            Regex::Empty | Regex::Epsilon => Regex::Epsilon,
            s @ Regex::Star(_) => s,
            r => Regex::Star(Box::new(r)),
        }
    }

    /// `r r*`
    pub fn plus(a: Regex) -> Regex {
        Regex::concat(a.clone(), Regex::star(a))
    }

    /// Parses `+` for union, juxtaposition for concatenation, postfix `*`
    /// and `⁺` (or `^+`), `1`/`ε`/`id` for the empty word and `0`/`∅` for
    /// the empty language. Symbol names are matched longest first.
    pub fn parse(text: &str, symbols: &[String]) -> Result<Regex, AutomatonError> {
        let mut names: Vec<&str> = symbols.iter().map(String::as_str).collect();
        names.sort_by_key(|n| std::cmp::Reverse(n.len()));
        let tokens = tokenize(text, &names)?;
        let mut p = Parser { tokens, pos: 0 };
        let r = p.union()?;
        if p.pos != p.tokens.len() {
            return Err(AutomatonError::Regex(format!("unexpected `{}`", p.tokens[p.pos].show())));
        }
        Ok(r)
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            Regex::Empty => write!(f, "0"),
            Regex::Epsilon => write!(f, "1"),
            Regex::Sym(s) => write!(f, "{s}"),
            Regex::Union(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 0)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Regex::Concat(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                if needs_space(a, b) {
                    write!(f, " ")?;
                }
                b.fmt_prec(f, 1)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Regex::Star(a) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")
            }
        }
    }

    fn symbol_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Regex::Sym(s) => out.push(s),
            Regex::Union(a, b) | Regex::Concat(a, b) => {
                a.symbol_names(out);
                b.symbol_names(out);
            }
            Regex::Star(a) => a.symbol_names(out),
            Regex::Empty | Regex::Epsilon => {}
        }
    }
}

/// Multi-letter names need a separator to stay readable and parseable.
fn needs_space(a: &Regex, b: &Regex) -> bool {
    let mut names = Vec::new();
    a.symbol_names(&mut names);
    b.symbol_names(&mut names);
    names.iter().any(|n| n.chars().count() > 1)
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Sym(String),
    Plus,
    Star,
    Sup,
    Open,
    Close,
    One,
    Zero,
}

impl Tok {
    fn show(&self) -> String {
        match self {
            Tok::Sym(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Star => "*".into(),
            Tok::Sup => "⁺".into(),
            Tok::Open => "(".into(),
            Tok::Close => ")".into(),
            Tok::One => "1".into(),
            Tok::Zero => "0".into(),
        }
    }
}

fn tokenize(text: &str, names: &[&str]) -> Result<Vec<Tok>, AutomatonError> {
    let mut out = Vec::new();
    let mut rest = text;
    while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
            continue;
        }
        if let Some(name) = names.iter().find(|n| rest.starts_with(**n)) {
            out.push(Tok::Sym(name.to_string()));
            rest = &rest[name.len()..];
            continue;
        }
        let (tok, len) = if rest.starts_with("^+") {
            (Tok::Sup, 2)
        } else if rest.starts_with("id") {
            (Tok::One, 2)
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '*' => Tok::Star,
                '⁺' => Tok::Sup,
                '(' => Tok::Open,
                ')' => Tok::Close,
                '1' | 'ε' => Tok::One,
                '0' | '∅' => Tok::Zero,
                other => return Err(AutomatonError::UnknownSymbol(other.to_string())),
            };
            (t, c.len_utf8())
        };
        out.push(tok);
        rest = &rest[len..];
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn union(&mut self) -> Result<Regex, AutomatonError> {
        let mut r = self.concat()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            let rhs = self.concat()?;
            r = Regex::union(r, rhs);
        }
        Ok(r)
    }

    fn concat(&mut self) -> Result<Regex, AutomatonError> {
        let mut parts = Vec::new();
        while matches!(self.peek(), Some(Tok::Sym(_) | Tok::Open | Tok::One | Tok::Zero)) {
            parts.push(self.postfix()?);
        }
        if parts.is_empty() {
            return Err(AutomatonError::Regex(match self.peek() {
                Some(t) => format!("unexpected `{}`", t.show()),
                None => "unexpected end of input".into(),
            }));
        }
        Ok(parts.into_iter().reduce(Regex::concat).expect("non-empty"))
    }

    fn postfix(&mut self) -> Result<Regex, AutomatonError> {
        let mut r = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => r = Regex::star(r),
                Some(Tok::Sup) => r = Regex::plus(r),
                _ => return Ok(r),
            }
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> Result<Regex, AutomatonError> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Sym(s)) => Ok(Regex::Sym(s)),
            Some(Tok::One) => Ok(Regex::Epsilon),
            Some(Tok::Zero) => Ok(Regex::Empty),
            Some(Tok::Open) => {
                let r = self.union()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(AutomatonError::Regex("missing `)`".into()));
                }
                self.pos += 1;
                Ok(r)
            }
            _ => Err(AutomatonError::Regex("expected a symbol or `(`".into())),
        }
    }
}

fn thompson(r: &Regex, nfa: &mut Nfa) -> Result<(usize, usize), AutomatonError> {
    let start = nfa.add_state("", false);
    let end = nfa.add_state("", false);
    match r {
        Regex::Empty => {}
        Regex::Epsilon => nfa.add_epsilon(start, end),
        Regex::Sym(s) => {
            let a = nfa.symbol_index(s)?;
            nfa.add_transition(start, a, end);
        }
        Regex::Union(a, b) => {
            for sub in [a, b] {
                let (s, e) = thompson(sub, nfa)?;
                nfa.add_epsilon(start, s);
                nfa.add_epsilon(e, end);
            }
        }
        Regex::Concat(a, b) => {
            let (s1, e1) = thompson(a, nfa)?;
            let (s2, e2) = thompson(b, nfa)?;
            nfa.add_epsilon(start, s1);
            nfa.add_epsilon(e1, s2);
            nfa.add_epsilon(e2, end);
        }
        Regex::Star(a) => {
            let (s, e) = thompson(a, nfa)?;
            nfa.add_epsilon(start, s);
            nfa.add_epsilon(e, s);
            nfa.add_epsilon(start, end);
            nfa.add_epsilon(e, end);
        }
    }
    Ok((start, end))
}

/// Compiles `r` over the columns `symbols` (Thompson construction, then
/// subset construction and minimization).
pub fn regex_to_dfa(r: &Regex, symbols: &[String]) -> Result<Dfa, AutomatonError> {
    let mut nfa = Nfa::new(symbols.to_vec());
    let (s, e) = thompson(r, &mut nfa)?;
    nfa.set_initial(s);
    nfa.set_accepting(e, true);
    Ok(nfa.determinize().minimize())
}

/// State elimination. States that cannot reach acceptance are dropped
/// first; then the state with the fewest in×out edges goes next.
pub fn dfa_to_regex(d: &Dfa) -> Regex {
    let n = d.state_count();
    let k = d.symbols().len();
    let mut co = vec![false; n];
    for s in d.accepting_states() {
        co[s] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..n {
            if !co[s] && (0..k).any(|a| co[d.next(s, a)]) {
                co[s] = true;
                changed = true;
            }
        }
    }
    if !co[d.initial()] {
        return Regex::Empty;
    }
    // Generalized automaton: states 0..n, start = n, final = n + 1.
    let (start, fin) = (n, n + 1);
    let mut edge: Vec<Vec<Regex>> = vec![vec![Regex::Empty; n + 2]; n + 2];
    for s in (0..n).filter(|&s| co[s]) {
        for a in 0..k {
            let t = d.next(s, a);
            if co[t] {
                let r = std::mem::replace(&mut edge[s][t], Regex::Empty);
                edge[s][t] = Regex::union(r, Regex::sym(d.symbols()[a].clone()));
            }
        }
        if d.is_accepting(s) {
            edge[s][fin] = Regex::Epsilon;
        }
    }
    edge[start][d.initial()] = Regex::Epsilon;
    let mut alive: Vec<usize> = (0..n).filter(|&s| co[s]).collect();
    while !alive.is_empty() {
        let degree = |s: usize| {
            let ins = alive.iter().chain([start].iter()).filter(|&&p| p != s && edge[p][s] != Regex::Empty).count();
            let outs = alive.iter().chain([fin].iter()).filter(|&&q| q != s && edge[s][q] != Regex::Empty).count();
            ins * outs
        };
        let (idx, &s) = alive.iter().enumerate().min_by_key(|&(_, &s)| (degree(s), s)).expect("non-empty");
        alive.remove(idx);
        let loop_ = Regex::star(edge[s][s].clone());
        let preds: Vec<usize> = alive.iter().copied().chain([start]).filter(|&p| edge[p][s] != Regex::Empty).collect();
        let succs: Vec<usize> = alive.iter().copied().chain([fin]).filter(|&q| edge[s][q] != Regex::Empty).collect();
        for &p in &preds {
            for &q in &succs {
                let via = Regex::concat(Regex::concat(edge[p][s].clone(), loop_.clone()), edge[s][q].clone());
                let old = std::mem::replace(&mut edge[p][q], Regex::Empty);
                edge[p][q] = Regex::union(old, via);
            }
        }
        for p in 0..n + 2 {
            edge[p][s] = Regex::Empty;
            edge[s][p] = Regex::Empty;
        }
    }
    edge[start][fin].clone()
}

//! Tokenizer and chart parser for the fragment grammar.
//!
//! Sentences are parsed independently with a CKY chart over five binary
//! rules; each root sentence is wrapped by the silent complementizer and the
//! sentences are chained left to right by coordination nodes.

use std::fmt;

use crate::error::{Error, Result};
use crate::lexicon::{Cat, LexEntry, Lexicon};
use crate::udrs::{SubordConstraint, Udrs};
use crate::lexicon::Sign;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Token {
    Word(String),
    /// Sentence boundary: `.`, `!`, `?` or sentence-joining `and`.
    Sep,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Word(w) => f.write_str(w),
            Token::Sep => f.write_str("SEP"),
        }
    }
}

pub fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut Vec<Token>| {
        if !word.is_empty() {
            let w = std::mem::take(word).to_lowercase();
            out.push(if w == "and" { Token::Sep } else { Token::Word(w) });
        }
    };
    for ch in text.chars() {
        match ch {
            '.' | '!' | '?' => {
                flush(&mut word, &mut out);
                out.push(Token::Sep);
            }
            ',' | ';' | ':' => flush(&mut word, &mut out),
            c if c.is_whitespace() => flush(&mut word, &mut out),
            c => word.push(c),
        }
    }
    flush(&mut word, &mut out);
    out
}

/// Drops leading, trailing and repeated separators.
pub fn normalize(tokens: &[Token]) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::new();
    for t in tokens {
        if *t == Token::Sep && matches!(out.last(), None | Some(Token::Sep)) {
            continue;
        }
        out.push(t.clone());
    }
    if out.last() == Some(&Token::Sep) {
        out.pop();
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Construction {
    Lexical,
    HeadComp,
    HeadSubj,
    Functional,
    Coord,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Lexical => "lexical",
            Construction::HeadComp => "head-comp",
            Construction::HeadSubj => "head-subj",
            Construction::Functional => "functional",
            Construction::Coord => "coord",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationNode {
    pub construction: Construction,
    pub cat: Cat,
    /// Token span in the normalized token stream.
    pub start: usize,
    pub end: usize,
    /// Surface word of a lexical leaf; `None` for the silent complementizer.
    pub word: Option<String>,
    pub entry: Option<LexEntry>,
    pub head: Option<Box<DerivationNode>>,
    pub nonhead: Option<Box<DerivationNode>>,
    /// Whether the head daughter precedes the non-head daughter.
    pub head_first: bool,
    pub sign: Option<Sign>,
    /// Constraints added at this node beyond the daughters' union.
    pub introduced: Vec<SubordConstraint>,
    /// The node's UDRS before any plural disambiguation applied here.
    pub before_disambiguation: Option<Udrs>,
}

impl DerivationNode {
    fn leaf(cat: Cat, start: usize, word: Option<String>, entry: Option<LexEntry>) -> Self {
        let end = if word.is_some() { start + 1 } else { start };
        DerivationNode {
            construction: Construction::Lexical,
            cat,
            start,
            end,
            word,
            entry,
            head: None,
            nonhead: None,
            head_first: true,
            sign: None,
            introduced: Vec::new(),
            before_disambiguation: None,
        }
    }

    fn branch(
        construction: Construction,
        cat: Cat,
        head: DerivationNode,
        nonhead: DerivationNode,
        head_first: bool,
    ) -> Self {
        let (start, end) = if head_first {
            (head.start, nonhead.end)
        } else {
            (nonhead.start, head.end)
        };
        DerivationNode {
            construction,
            cat,
            start,
            end,
            word: None,
            entry: None,
            head: Some(Box::new(head)),
            nonhead: Some(Box::new(nonhead)),
            head_first,
            sign: None,
            introduced: Vec::new(),
            before_disambiguation: None,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.construction == Construction::Lexical
    }

    /// Daughters in surface order.
    pub fn children(&self) -> Vec<&DerivationNode> {
        match (&self.head, &self.nonhead) {
            (Some(h), Some(n)) if self.head_first => vec![h, n],
            (Some(h), Some(n)) => vec![n, h],
            _ => Vec::new(),
        }
    }

    /// Pre-order traversal in surface order.
    pub fn walk(&self) -> Vec<&DerivationNode> {
        let mut out = vec![self];
        for c in self.children() {
            out.extend(c.walk());
        }
        out
    }

    /// The token string this tree spans, separators between sentences.
    pub fn yield_tokens(&self) -> Vec<Token> {
        match self.construction {
            Construction::Lexical => self.word.iter().map(|w| Token::Word(w.clone())).collect(),
            Construction::Coord => {
                let mut out = self.head.as_ref().unwrap().yield_tokens();
                out.push(Token::Sep);
                out.extend(self.nonhead.as_ref().unwrap().yield_tokens());
                out
            }
            _ => self.children().iter().flat_map(|c| c.yield_tokens()).collect(),
        }
    }

    /// Bracketed rendering, e.g. `[S [NP [Det every] [N lawyer]] ...]`.
    pub fn bracketed(&self) -> String {
        if self.is_leaf() {
            let word = self.word.as_deref().unwrap_or("∅");
            return format!("[{} {}]", self.cat, word);
        }
        let inner: Vec<String> = self.children().iter().map(|c| c.bracketed()).collect();
        format!("[{} {}]", self.cat, inner.join(" "))
    }
}

type Cell = Vec<DerivationNode>;

fn combine(left: &DerivationNode, right: &DerivationNode) -> Option<DerivationNode> {
    use Construction::*;
    let (l, r) = (left.clone(), right.clone());
    match (left.cat, right.cat) {
        (Cat::Det(a), Cat::Noun(b)) if a == b => Some(DerivationNode::branch(HeadComp, Cat::Np, l, r, true)),
        (Cat::Tv, Cat::Np) => Some(DerivationNode::branch(HeadComp, Cat::Vp, l, r, true)),
        (Cat::Cv, Cat::Cp) => Some(DerivationNode::branch(HeadComp, Cat::Vp, l, r, true)),
        (Cat::Np, Cat::Vp) => Some(DerivationNode::branch(HeadSubj, Cat::S, r, l, false)),
        (Cat::Comp, Cat::S) => Some(DerivationNode::branch(Functional, Cat::Cp, l, r, true)),
        _ => None,
    }
}

/// All analyses of one sentence spanning `words[0..]`, whose first token has
/// position `offset` in the normalized stream.
fn parse_sentence(words: &[(usize, &str)], lexicon: &Lexicon) -> Result<Vec<DerivationNode>> {
    let n = words.len();
    // chart[i][len-1] holds constituents covering words i..i+len
    let mut chart: Vec<Vec<Cell>> = vec![vec![Vec::new(); n]; n];
    for (i, (pos, w)) in words.iter().enumerate() {
        let entries = lexicon.lookup(w).ok_or_else(|| Error::UnknownWord {
            word: w.to_string(),
            position: *pos,
        })?;
        for e in entries {
            chart[i][0].push(DerivationNode::leaf(e.cat(), *pos, Some(w.to_string()), Some(e.clone())));
        }
    }
    for len in 2..=n {
        for i in 0..=(n - len) {
            let mut cell = Vec::new();
            for split in 1..len {
                for l in &chart[i][split - 1] {
                    for r in &chart[i + split][len - split - 1] {
                        if let Some(node) = combine(l, r) {
                            cell.push(node);
                        }
                    }
                }
            }
            chart[i][len - 1] = cell;
        }
    }
    let roots: Vec<DerivationNode> = chart[0][n - 1]
        .iter()
        .filter(|d| d.cat == Cat::S)
        .cloned()
        .collect();
    if roots.is_empty() {
        // the longest prefix forming a subject NP or sentence, if any
        let reach = (1..=n)
            .rev()
            .find(|&len| chart[0][len - 1].iter().any(|d| matches!(d.cat, Cat::Np | Cat::S)))
            .unwrap_or(0);
        let position = if reach < n { words[reach].0 } else { words[n - 1].0 + 1 };
        return Err(Error::ParseFailure { position });
    }
    Ok(roots
        .into_iter()
        .map(|s| {
            let comp = DerivationNode::leaf(Cat::Comp, s.start, None, None);
            DerivationNode::branch(Construction::Functional, Cat::S, comp, s, true)
        })
        .collect())
}

/// Every derivation of the token list as a discourse.
pub fn parse(tokens: &[Token], lexicon: &Lexicon) -> Result<Vec<DerivationNode>> {
    let tokens = normalize(tokens);
    if tokens.is_empty() {
        return Err(Error::ParseFailure { position: 0 });
    }
    let mut sentences: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, t) in tokens.iter().enumerate() {
        match t {
            Token::Word(w) => sentences.last_mut().unwrap().push((i, w)),
            Token::Sep => sentences.push(Vec::new()),
        }
    }
    let mut trees: Vec<DerivationNode> = Vec::new();
    for (k, words) in sentences.iter().enumerate() {
        let roots = parse_sentence(words, lexicon)?;
        if k == 0 {
            trees = roots;
            continue;
        }
        let mut next = Vec::new();
        for left in &trees {
            for right in &roots {
                next.push(DerivationNode::branch(
                    Construction::Coord,
                    Cat::Discourse,
                    left.clone(),
                    right.clone(),
                    true,
                ));
            }
        }
        trees = next;
    }
    Ok(trees)
}

pub fn parse_text(text: &str, lexicon: &Lexicon) -> Result<Vec<DerivationNode>> {
    parse(&tokenize(text), lexicon)
}

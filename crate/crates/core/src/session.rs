//! Incremental discourse interpretation, one sentence at a time.

use crate::disambiguation::{Knowledge, NpInfo};
use crate::error::{Error, Result};
use crate::lexicon::{Lexicon, Sign};
use crate::parser::{normalize, parse, tokenize, Token};
use crate::principles::{combine_coord, DisambiguationStep, Interpreter};
use crate::udrs::Udrs;

/// A discourse under construction. After each sentence the discourse sign
/// is the coordination of the previous discourse with the new sentence.
pub struct Session<'a> {
    interpreter: Interpreter<'a>,
    sign: Option<Sign>,
    nps: Vec<NpInfo>,
    sentences: usize,
    steps: Vec<DisambiguationStep>,
}

impl<'a> Session<'a> {
    pub fn new(lexicon: &'a Lexicon, knowledge: &'a Knowledge) -> Self {
        Session {
            interpreter: Interpreter::new(lexicon, knowledge),
            sign: None,
            nps: Vec::new(),
            sentences: 0,
            steps: Vec::new(),
        }
    }

    /// Adds every sentence of `text` in order.
    pub fn add(&mut self, text: &str) -> Result<&Udrs> {
        let tokens = normalize(&tokenize(text));
        if tokens.is_empty() {
            return Err(Error::ParseFailure { position: 0 });
        }
        for sentence in tokens.split(|t| *t == Token::Sep) {
            self.add_sentence(sentence)?;
        }
        Ok(self.udrs())
    }

    fn add_sentence(&mut self, tokens: &[Token]) -> Result<()> {
        let tree = parse(tokens, self.interpreter.lexicon)?.swap_remove(0);
        let new = self.interpreter.interpret_from(&tree, self.nps.len(), self.sentences)?;
        self.steps.extend(new.steps);
        let sign = match self.sign.take() {
            None => new.sign,
            Some(prev) => {
                let r = combine_coord(&prev, &new.sign, self.interpreter.knowledge, &self.nps)?;
                self.steps.extend(r.steps);
                r.sign
            }
        };
        self.sign = Some(sign);
        self.nps.extend(new.nps);
        self.sentences += 1;
        Ok(())
    }

    pub fn udrs(&self) -> &Udrs {
        static EMPTY: std::sync::OnceLock<Udrs> = std::sync::OnceLock::new();
        self.sign.as_ref().map_or_else(|| EMPTY.get_or_init(Udrs::empty), |s| &s.udrs)
    }

    pub fn sign(&self) -> Option<&Sign> {
        self.sign.as_ref()
    }

    pub fn nps(&self) -> &[NpInfo] {
        &self.nps
    }

    pub fn sentence_count(&self) -> usize {
        self.sentences
    }

    pub fn steps(&self) -> &[DisambiguationStep] {
        &self.steps
    }
}

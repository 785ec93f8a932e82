//! Small hand-written scanner shared by the text formats.

use crate::error::{Error, Result};
use crate::foundations::Label;
use crate::foundations::label::is_atom;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub(crate) fn expect_word(&mut self, word: &str) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(word) {
            self.pos += word.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{word}`")))
        }
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        let found = match self.src[self.pos..].chars().next() {
            Some(c) => format!(", found `{c}`"),
            None => ", found end of input".to_owned(),
        };
        Error::parse(self.pos, format!("{}{found}", msg.into()))
    }

    pub(crate) fn atom(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let len = self
            .rest()
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        if len == 0 {
            return Err(self.error("expected a label"));
        }
        let out = &self.rest()[..len];
        debug_assert!(is_atom(out));
        self.pos += len;
        Ok(out)
    }

    pub(crate) fn label(&mut self) -> Result<Label> {
        self.atom().map(Label::from)
    }

    /// `open label (, label)* close`, possibly empty.
    pub(crate) fn label_list(&mut self, open: char, close: char) -> Result<Vec<Label>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.label()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    pub(crate) fn label_list_list(&mut self, open: char, close: char) -> Result<Vec<Vec<Label>>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.label_list(open, close)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    /// A double-quoted string without escapes.
    pub(crate) fn quoted(&mut self) -> Result<&'a str> {
        self.expect('"')?;
        let end = self
            .rest()
            .find('"')
            .ok_or_else(|| self.error("unterminated string"))?;
        let out = &self.rest()[..end];
        self.pos += end + 1;
        Ok(out)
    }

    /// Consumes up to (not including) the first character of `stops` found
    /// outside brackets and quotes.
    pub(crate) fn balanced_until(&mut self, stops: &[char]) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        let mut in_quotes = false;
        for (i, c) in self.rest().char_indices() {
            if in_quotes {
                in_quotes = c != '"';
                continue;
            }
            if depth == 0 && stops.contains(&c) {
                self.pos = start + i;
                return Ok(self.src[start..self.pos].trim_end());
            }
            match c {
                '"' => in_quotes = true,
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(Error::parse(start + i, "unbalanced closing bracket"));
                    }
                }
                _ => {}
            }
        }
        Err(self.error("unexpected end of input"))
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }
}

/// Splits `text` at top-level occurrences of `+` and `-`, keeping the sign
/// with the piece that follows it. Returns `(offset, sign, piece)` triples.
pub(crate) fn split_signed_terms(text: &str) -> Result<Vec<(usize, bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut in_quotes = false;
    let mut start = 0;
    let mut negative = false;
    let mut seen_content = false;
    for (i, c) in text.char_indices() {
        if in_quotes {
            in_quotes = c != '"';
            continue;
        }
        match c {
            '"' => {
                in_quotes = true;
                seen_content = true;
            }
            '(' | '[' | '{' => {
                depth += 1;
                seen_content = true;
            }
            ')' | ']' | '}' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(i, "unbalanced closing bracket"));
                }
            }
            '+' | '-' if depth == 0 => {
                if seen_content {
                    out.push((start, negative, text[start..i].trim()));
                } else if !text[start..i].trim().is_empty() {
                    return Err(Error::parse(i, "misplaced sign"));
                } else if start > 0 || negative {
                    return Err(Error::parse(i, "repeated sign"));
                }
                negative = c == '-';
                start = i + 1;
                seen_content = false;
            }
            c if !c.is_whitespace() => seen_content = true,
            _ => {}
        }
    }
    if in_quotes || depth != 0 {
        return Err(Error::parse(text.len(), "unbalanced brackets or quotes"));
    }
    if !seen_content {
        return Err(Error::parse(text.len(), "expected a term"));
    }
    out.push((start, negative, text[start..].trim()));
    Ok(out)
}

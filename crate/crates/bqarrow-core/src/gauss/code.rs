//! Signed Gauss code text: tokens `O<label><sign>` / `U<label><sign>` in circle order.

use super::{Arrow, GaussDiagram, GaussError, Sign};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

struct Token {
    over: bool,
    label: u64,
    sign: Sign,
}

fn tokenize(text: &str) -> Result<Vec<Token>, GaussError> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (start, kind) = chars[i];
        let over = match kind {
            'O' => true,
            'U' => false,
            _ => return Err(GaussError::Syntax { offset: start }),
        };
        i += 1;
        let mut label: u64 = 0;
        let mut digits = 0;
        while let Some(&(_, c)) = chars.get(i) {
            let Some(d) = c.to_digit(10) else { break };
            label = label
                .checked_mul(10)
                .and_then(|l| l.checked_add(u64::from(d)))
                .ok_or(GaussError::Syntax { offset: start })?;
            digits += 1;
            i += 1;
        }
        let sign = match chars.get(i) {
            Some((_, '+')) if digits > 0 => Sign::Positive,
            Some((_, '-')) if digits > 0 => Sign::Negative,
            Some(&(offset, _)) => return Err(GaussError::Syntax { offset }),
            None => return Err(GaussError::Syntax { offset: text.len() }),
        };
        i += 1;
        out.push(Token { over, label, sign });
    }
    Ok(out)
}

/// Parses a signed Gauss code. Arrows are numbered by first appearance of their label.
pub fn parse_gauss_code(text: &str) -> Result<GaussDiagram, GaussError> {
    let tokens = tokenize(text)?;
    // label -> (arrow index, tail, head, sign)
    let mut slots: BTreeMap<u64, (usize, Option<usize>, Option<usize>, Sign)> = BTreeMap::new();
    for (pos, t) in tokens.iter().enumerate() {
        let next = slots.len();
        let slot = slots.entry(t.label).or_insert((next, None, None, t.sign));
        if slot.3 != t.sign {
            return Err(GaussError::SignMismatch { label: t.label });
        }
        let end = if t.over { &mut slot.1 } else { &mut slot.2 };
        if end.replace(pos).is_some() {
            return Err(GaussError::Label { label: t.label });
        }
    }
    let mut arrows = alloc::vec![None; slots.len()];
    for (&label, &(idx, tail, head, sign)) in &slots {
        match (tail, head) {
            (Some(tail), Some(head)) => arrows[idx] = Some(Arrow { tail, head, sign }),
            _ => return Err(GaussError::Label { label }),
        }
    }
    GaussDiagram::new(arrows.into_iter().flatten().collect())
}

/// Writes the code with labels `1..n` in order of first appearance.
pub fn serialize_gauss_code(d: &GaussDiagram) -> String {
    let mut labels = alloc::vec![0usize; d.len()];
    let mut next = 0;
    let mut out = String::new();
    for (arrow, end) in d.endpoints() {
        if labels[arrow] == 0 {
            next += 1;
            labels[arrow] = next;
        }
        let kind = match end {
            super::End::Tail => 'O',
            super::End::Head => 'U',
        };
        let _ = write!(out, "{kind}{}{}", labels[arrow], d.arrows()[arrow].sign.symbol());
    }
    out
}

//! Reading a pair from JSON or from the ASCII layout printed by `render`.

use thiserror::Error;

use crate::bitableau::{StandardBitableau, TableauError};
use crate::correspondence::CorrespondencePair;

#[derive(Debug, Error)]
pub enum PairInputError {
    #[error("invalid pair JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {message}")]
    Ascii { line: usize, message: String },
    #[error("{which}: {source}")]
    Tableau {
        which: &'static str,
        #[source]
        source: TableauError,
    },
    #[error(transparent)]
    Pair(TableauError),
}

/// JSON when the text starts with `{`, otherwise the ASCII layout.
pub fn parse_pair(text: &str) -> Result<CorrespondencePair, PairInputError> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| PairInputError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    } else {
        parse_ascii(text)
    }
}

/// `T:` and `R:` header lines, each followed by rows of the form
/// `left entries | right entries`, left entries listed away from the wall
/// leftward.
fn parse_ascii(text: &str) -> Result<CorrespondencePair, PairInputError> {
    #[derive(Default)]
    struct Rows {
        left: Vec<Vec<usize>>,
        right: Vec<Vec<usize>>,
    }
    let mut t: Option<Rows> = None;
    let mut r: Option<Rows> = None;
    let mut current: Option<char> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "T:" | "R:" => {
                let which = line.chars().next().expect("nonempty");
                let slot = if which == 'T' { &mut t } else { &mut r };
                if slot.is_some() {
                    return Err(PairInputError::Ascii {
                        line: line_no,
                        message: format!("second {which}: section"),
                    });
                }
                *slot = Some(Rows::default());
                current = Some(which);
                continue;
            }
            _ => {}
        }
        let rows = match current {
            Some('T') => t.as_mut(),
            Some('R') => r.as_mut(),
            _ => None,
        }
        .ok_or_else(|| PairInputError::Ascii {
            line: line_no,
            message: "row before any T: or R: header".into(),
        })?;
        let (left, right) = line.split_once('|').ok_or_else(|| PairInputError::Ascii {
            line: line_no,
            message: "row has no wall `|`".into(),
        })?;
        let nums = |part: &str| -> Result<Vec<usize>, PairInputError> {
            part.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| PairInputError::Ascii {
                        line: line_no,
                        message: format!("{tok:?} is not a positive integer"),
                    })
                })
                .collect()
        };
        let mut l = nums(left)?;
        l.reverse();
        let rt = nums(right)?;
        if !l.is_empty() {
            rows.left.push(l);
        }
        if !rt.is_empty() {
            rows.right.push(rt);
        }
    }
    let missing = |which: &str| PairInputError::Ascii {
        line: text.lines().count(),
        message: format!("missing {which}: section"),
    };
    let t = t.ok_or_else(|| missing("T"))?;
    let r = r.ok_or_else(|| missing("R"))?;
    let t = StandardBitableau::new(t.left, t.right)
        .map_err(|source| PairInputError::Tableau { which: "T", source })?;
    let r = StandardBitableau::new(r.left, r.right)
        .map_err(|source| PairInputError::Tableau { which: "R", source })?;
    CorrespondencePair::new(t, r).map_err(PairInputError::Pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::insertion;

    #[test]
    fn ascii_render_reads_back() {
        for word in [
            "-3 6 4 -7 2 -5 1",
            "2 7 5 -6 4 -3 1",
            "",
            "-1 -2 -3",
            "1 2 3",
        ] {
            let p = insertion(&word.parse().unwrap());
            assert_eq!(parse_pair(&p.render_ascii()).unwrap(), p, "{word}");
        }
    }

    #[test]
    fn json_reads_back() {
        let p = insertion(&"3 -1 2".parse().unwrap());
        assert_eq!(parse_pair(&serde_json::to_string(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn errors_name_the_problem() {
        let e = parse_pair("T:\n1 |\nR:\n| 1\n").unwrap_err();
        assert!(e.to_string().contains("shape mismatch"), "{e}");
        let e = parse_pair("T:\n1 2 |\nR:\n2 1 |\n").unwrap_err();
        assert!(e.to_string().contains("row invariant"), "{e}");
        let e = parse_pair("T:\nx |\n").unwrap_err();
        assert!(e.to_string().starts_with("line 2"), "{e}");
        let e =
            parse_pair(r#"{"T":{"left":[[1],[2]],"right":[]},"R":{"left":[[2],[1]],"right":[]}}"#)
                .unwrap_err();
        assert!(e.to_string().contains("column invariant"), "{e}");
    }
}

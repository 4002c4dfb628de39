use crate::error::{Error, Result};

use super::{Poset, MAX_ELEMENTS};

/// Parses the line-based poset format:
///
/// ```text
/// # comment
/// d 3
/// rel 2 1
/// rel 3 1
/// ```
///
/// `rel i j` declares `p_i < p_j` with 1-based labels. The result is the
/// transitive closure of the declared relations.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut d: Option<usize> = None;
    let mut relations = Vec::new();
    let mut relation_lines = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut words = line.split_whitespace();
        match words.next() {
            Some("d") => {
                if d.is_some() {
                    return Err(fail("duplicate `d` declaration".into()));
                }
                let n = parse_number(words.next(), "element count").map_err(&fail)?;
                if words.next().is_some() {
                    return Err(fail("trailing tokens after `d <n>`".into()));
                }
                if n == 0 {
                    return Err(fail("element count must be positive".into()));
                }
                if n > MAX_ELEMENTS {
                    return Err(Error::capacity("poset size", n, MAX_ELEMENTS));
                }
                d = Some(n);
            }
            Some("rel") => {
                let n = d.ok_or_else(|| fail("`rel` before `d` declaration".into()))?;
                let i = parse_number(words.next(), "lower label").map_err(&fail)?;
                let j = parse_number(words.next(), "upper label").map_err(&fail)?;
                if words.next().is_some() {
                    return Err(fail("trailing tokens after `rel <i> <j>`".into()));
                }
                for label in [i, j] {
                    if label == 0 || label > n {
                        return Err(fail(format!("label {label} out of range 1..={n}")));
                    }
                }
                relations.push((i - 1, j - 1));
                relation_lines.push(line_no);
            }
            Some(other) => return Err(fail(format!("unknown directive `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }

    let d = d.ok_or(Error::Parse {
        line: last_line.max(1),
        message: "missing `d <n>` declaration".into(),
    })?;
    Poset::from_relations(d, relations.iter().copied()).map_err(|err| match err {
        Error::NotPartialOrder(_) => {
            // Blame the first relation whose prefix is already cyclic.
            let k = (1..=relations.len())
                .find(|&k| Poset::from_relations(d, relations[..k].iter().copied()).is_err())
                .expect("the full relation list is cyclic");
            Error::Parse {
                line: relation_lines[k - 1],
                message: format!("relation closes a cycle, so this is {err}"),
            }
        }
        other => other,
    })
}

fn parse_number(token: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let token = token.ok_or_else(|| format!("missing {what}"))?;
    token
        .parse::<usize>()
        .map_err(|_| format!("invalid {what} `{token}`"))
}

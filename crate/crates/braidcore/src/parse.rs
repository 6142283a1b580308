use std::fmt;
use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::BraidError;
use crate::word::ColoredBraidWord;

fn ints<T: FromStr>(key: &str, s: &str) -> Result<Vec<T>, BraidError> {
    s.split_whitespace()
        .map(|x| x.parse().map_err(|_| BraidError::Parse(format!("{key}: bad integer {x:?}"))))
        .collect()
}

/// Braid file text: `strands = n`, `colors = c_1 ... c_n`, `word = ±i ...`,
/// with `#` comments. The number of colors is the largest color listed.
impl FromStr for ColoredBraidWord {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<Self, BraidError> {
        let (mut strands, mut colors, mut word) = (None, None, None);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| BraidError::Parse(format!("line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim();
            let slot_taken = match key {
                "strands" => strands.replace(ints::<usize>(key, value)?).is_some(),
                "colors" => colors.replace(ints::<usize>(key, value)?).is_some(),
                "word" => word.replace(ints::<i32>(key, value)?).is_some(),
                other => return Err(BraidError::Parse(format!("line {}: unknown key {other:?}", lineno + 1))),
            };
            if slot_taken {
                return Err(BraidError::Parse(format!("line {}: duplicate key {key:?}", lineno + 1)));
            }
        }
        let strands = match strands.as_deref() {
            Some([n]) => *n,
            Some(_) => return Err(BraidError::Parse("strands: expected one integer".into())),
            None => return Err(BraidError::Parse("missing `strands`".into())),
        };
        if strands == 0 {
            return Err(BraidError::Parse("strands: must be positive".into()));
        }
        let colors = colors.unwrap_or_else(|| vec![1; strands]);
        let mu = colors.iter().copied().max().unwrap_or(1);
        let coloring = Coloring::new(colors, mu)?;
        ColoredBraidWord::new(strands, coloring, word.unwrap_or_default())
    }
}

impl fmt::Display for ColoredBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(" ");
        writeln!(f, "strands = {}", self.strands())?;
        writeln!(f, "colors = {}", join(self.bottom().colors().iter().map(|c| c.to_string()).collect()))?;
        writeln!(f, "word = {}", join(self.letters().iter().map(|l| l.to_string()).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines() {
        let b: ColoredBraidWord = "# hopf\n\nstrands = 2 # two\ncolors = 1 2\nword = 1 1\n".parse().unwrap();
        assert_eq!(b.letters(), &[1, 1]);
        assert_eq!(b.mu(), 2);
    }

    #[test]
    fn missing_colors_default_to_one() {
        let b: ColoredBraidWord = "strands = 2\nword = 1 1 1".parse().unwrap();
        assert_eq!(b.bottom().colors(), &[1, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            "word = 1",
            "strands = 2\ncolors = 1 3\n",
            "strands = 2\nword = 2",
            "strands = 2\nstrands = 2",
            "strands = x",
            "strands = 2\nfoo = 1",
            "strands = 2\ncolors = 1\n",
        ] {
            assert!(text.parse::<ColoredBraidWord>().is_err(), "{text}");
        }
    }

    #[test]
    fn display_parses_back() {
        let b: ColoredBraidWord = "strands = 3\ncolors = 1 1 2\nword = 1 1 1 2 2".parse().unwrap();
        assert_eq!(b.to_string().parse::<ColoredBraidWord>().unwrap(), b);
    }
}

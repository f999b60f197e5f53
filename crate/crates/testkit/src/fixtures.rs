use std::fmt;

/// A published integer sequence, exactly as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub id: &'static str,
    pub source: &'static str,
    pub terms: Vec<u64>,
}

impl Fixture {
    /// Parses `# <id> <source>` followed by one integer per line.
    pub fn parse(text: &'static str) -> Result<Fixture, ParseError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .and_then(|l| l.strip_prefix("# "))
            .ok_or(ParseError("missing `# <id> <source>` header".into()))?;
        let (id, source) = header
            .split_once(' ')
            .ok_or_else(|| ParseError(format!("header `{header}` has no source")))?;
        let terms = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.trim()
                    .parse::<u64>()
                    .map_err(|e| ParseError(format!("{id}: `{l}`: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if terms.is_empty() {
            return Err(ParseError(format!("{id}: no terms")));
        }
        Ok(Fixture {
            id,
            source: source.trim(),
            terms,
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn prefix(&self, n: usize) -> &[u64] {
        &self.terms[..n.min(self.terms.len())]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

macro_rules! embedded {
    ($($name:literal),* $(,)?) => {
        &[$(include_str!(concat!("../fixtures/", $name, ".txt"))),*]
    };
}

static FILES: &[&str] = embedded![
    "ramanujan_2",
    "nk_1",
    "chebyshev_2",
    "chebyshev_3_2",
    "ramanujan_3_2",
    "chebyshev_4_3",
    "ramanujan_4_3",
    "chebyshev_6_5",
    "ramanujan_6_5",
    "chebyshev_10_9",
    "ramanujan_10_9",
    "chebyshev_15_14",
    "ramanujan_15_14",
    "nk_2",
    "nk_3",
    "nk_5",
    "nk_9",
    "nk_14",
    "residue_1_mod_3",
    "residue_2_mod_3",
    "residue_1_mod_4",
    "residue_3_mod_4",
    "nk_1_residue_1_mod_3",
    "nk_1_residue_2_mod_3",
    "nk_1_residue_1_mod_4",
    "nk_1_residue_3_mod_4",
    "gap_least_n",
];

/// Every embedded fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    FILES
        .iter()
        .map(|t| Fixture::parse(t).expect("embedded fixture is well formed"))
        .collect()
}

/// Looks up a fixture by id.
pub fn fixture(id: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.id == id)
}

use std::fmt;

/// Line-oriented `key: value` output.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.lines.push((key.into(), value.to_string()));
        self
    }

    pub fn flag(&mut self, key: impl Into<String>, value: bool) -> &mut Self {
        self.push(key, yes_no(value))
    }

    pub fn extend(&mut self, other: Report) -> &mut Self {
        self.lines.extend(other.lines);
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Why a command stopped. Each maps to an exit status.
#[derive(Debug)]
pub enum Failure {
    /// An object failed validation (exit 1, report on stdout).
    Invalid(Report),
    /// Bad flag combination (exit 2).
    Usage(String),
    /// Filesystem trouble (exit 1).
    Io(anyhow::Error),
}

impl Failure {
    pub fn invalid(err: impl fmt::Display) -> Self {
        let mut r = Report::new();
        r.push("valid", "no").push("error", err);
        Failure::Invalid(r)
    }
}

impl From<brachyon::Error> for Failure {
    fn from(e: brachyon::Error) -> Self {
        Failure::invalid(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

use relfrac_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{}line {line}: {message}", file.as_deref().map(|f| format!("{f}: ")).unwrap_or_default())]
    Parse { file: Option<String>, line: usize, message: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("mismatch: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse { file: None, line, message: message.into() }
    }

    pub fn in_file(self, path: &str) -> CliError {
        match self {
            CliError::Parse { line, message, .. } => CliError::Parse { file: Some(path.to_string()), line, message },
            e => e,
        }
    }

    /// 2 usage, 3 timeout or exhausted budget, 4 mismatch, 5 undecided.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Mismatch(_) => 4,
            CliError::Core(e) => match e {
                CoreError::InvalidParameter(_)
                | CoreError::InvalidArgument(_)
                | CoreError::SizeLimit { .. }
                | CoreError::NotVertexTransitive
                | CoreError::Script { .. } => 2,
                CoreError::Timeout { .. } | CoreError::NonConvergence(_) => 3,
                CoreError::Inconsistency(_) => 4,
                CoreError::Undecided(_) | CoreError::SearchCap { .. } => 5,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Mismatch(_) => "mismatch",
            CliError::Core(e) => match e {
                CoreError::InvalidParameter(_) => "invalid_parameter",
                CoreError::InvalidArgument(_) => "invalid_argument",
                CoreError::SizeLimit { .. } => "size_limit",
                CoreError::Timeout { .. } => "timeout",
                CoreError::SearchCap { .. } => "search_cap",
                CoreError::Undecided(_) => "undecided",
                CoreError::NonConvergence(_) => "non_convergence",
                CoreError::NotVertexTransitive => "not_vertex_transitive",
                CoreError::Script { .. } => "script",
                CoreError::Inconsistency(_) => "inconsistency",
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::parse(3, "x").in_file("g.txt").to_string(), "g.txt: line 3: x");
        assert_eq!(CliError::from(CoreError::Timeout { lower_bound: None }).exit_code(), 3);
        assert_eq!(CliError::from(CoreError::NonConvergence(9)).exit_code(), 3);
        assert_eq!(CliError::Mismatch("x".into()).exit_code(), 4);
        assert_eq!(CliError::from(CoreError::Inconsistency("x".into())).exit_code(), 4);
        assert_eq!(CliError::from(CoreError::Undecided("x".into())).exit_code(), 5);
        assert_eq!(CliError::from(CoreError::SearchCap { what: "x", nodes: 1 }).exit_code(), 5);
        assert_eq!(CliError::from(CoreError::NotVertexTransitive).kind(), "not_vertex_transitive");
    }
}

//! The `isodist` command line.
//!
//! Every subcommand produces a JSON object, a plain-text rendering and,
//! where a cover graph is involved, DOT. Exit codes: 0 success, 1 usage,
//! 2 invalid input, 3 computation limit.

mod commands;
mod dot;
mod input;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

pub use dot::emit_dot;

/// Version tag carried by every JSON document.
pub const FORMAT_TAG: &str = "isodist/1";

/// Environment variable overriding the default pre-order size cap.
pub const MAX_ELEMENTS_VAR: &str = "ISODIST_MAX_ELEMENTS";

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "isodist", version, about = "Orders and distances induced by isomorphism invariants")]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Finite pre-orders: condensation, cover graphs, distances.
    #[command(subcommand)]
    Poset(commands::poset::PosetCmd),
    /// Finite categories labelled by an invariant.
    #[command(subcommand)]
    Category(commands::category::CategoryCmd),
    /// Chromatic invariants of simple graphs.
    #[command(subcommand)]
    Graph(commands::graph::GraphCmd),
    /// Finite abelian groups as divisor chains.
    #[command(subcommand)]
    Abelian(commands::abelian::AbelianCmd),
    /// Group orders under divisibility.
    #[command(subcommand)]
    Order(commands::order::OrderCmd),
    /// Class-2 algebras and their matrices of linear forms.
    #[command(subcommand)]
    Forms(commands::forms::FormsCmd),
}

/// A failure with its exit code.
#[derive(Debug)]
pub(crate) struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: msg.into() }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: msg.into() }
    }
}

impl From<isodist::Error> for CliError {
    fn from(e: isodist::Error) -> Self {
        let code = match e {
            isodist::Error::Input(_) | isodist::Error::Capability(_) => EXIT_INPUT,
            isodist::Error::Limit(_) => EXIT_LIMIT,
        };
        CliError { code, message: e.to_string() }
    }
}

pub(crate) type CliResult<T> = Result<T, CliError>;

/// What a subcommand hands back for rendering.
pub(crate) struct Output {
    fields: Map<String, Value>,
    text: String,
    dot: Option<String>,
    code: u8,
}

impl Output {
    pub(crate) fn new(text: impl Into<String>) -> Self {
        Output { fields: Map::new(), text: text.into(), dot: None, code: 0 }
    }

    pub(crate) fn field(mut self, key: &str, value: impl serde::Serialize) -> Self {
        let value = serde_json::to_value(value).expect("output values serialize");
        self.fields.insert(key.to_string(), value);
        self
    }

    pub(crate) fn dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    /// Report the result but still exit with `code`.
    pub(crate) fn exit_code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }

    fn render(mut self, format: Format) -> CliResult<(String, u8)> {
        let body = match format {
            Format::Json => {
                self.fields.insert("format".into(), Value::from(FORMAT_TAG));
                let mut s = serde_json::to_string_pretty(&Value::Object(self.fields)).expect("JSON values print");
                s.push('\n');
                s
            }
            Format::Dot => self.dot.ok_or_else(|| CliError::usage("this command has no DOT output"))?,
            Format::Text => {
                let mut s = self.text;
                if !s.is_empty() && !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        };
        Ok((body, self.code))
    }
}

/// Shared state for one invocation.
pub(crate) struct Context<'a> {
    stdin: Option<&'a mut dyn Read>,
    max_elements_env: Option<String>,
}

/// Parse `args` (program name first), execute, and write the result.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut ctx = Context { stdin: Some(stdin), max_elements_env: std::env::var(MAX_ELEMENTS_VAR).ok() };
    let result = match cli.command {
        Command::Poset(c) => commands::poset::run(c, &mut ctx),
        Command::Category(c) => commands::category::run(c, &mut ctx),
        Command::Graph(c) => commands::graph::run(c, &mut ctx),
        Command::Abelian(c) => commands::abelian::run(c),
        Command::Order(c) => commands::order::run(c),
        Command::Forms(c) => commands::forms::run(c, &mut ctx),
    }
    .and_then(|out| out.render(cli.format));
    match result {
        Ok((body, code)) => {
            if stdout.write_all(body.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "isodist: {}", e.message);
            e.code
        }
    }
}

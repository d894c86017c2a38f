mod args;
mod commands;
mod failure;
mod render;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;
use nullcover::Caps;
use serde_json::Value;

use args::Cli;
use commands::Context;
use failure::{ErrorBody, ErrorReport, Failure, FailureClass, Reproduction};

fn read_input(arg: &str) -> Result<Value, Failure> {
    let text = match arg.strip_prefix('@') {
        Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::new(FailureClass::Io, format!("reading standard input: {e}")))?;
            s
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::new(FailureClass::Io, format!("reading {path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Failure::schema(format!("input is not JSON: {e}")))
}

fn write_output(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.global.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::new(FailureClass::Io, format!("writing {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(FailureClass::Io, format!("writing output: {e}"))),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse_from(&argv);
    let input = match cli.global.input.as_deref().map(read_input).transpose() {
        Ok(v) => v,
        Err(f) => return report(&f, &argv, None),
    };
    let ctx = Context {
        seed: cli.global.seed,
        caps: Caps::new(cli.global.cap_enum, cli.global.cap_verify),
        input: input.as_ref(),
    };
    let result = commands::run(&cli.command, &ctx)
        .and_then(|value| write_output(&cli, &render::render(&value, cli.global.format)));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report(&f, &argv, input.as_ref()),
    }
}

fn report(f: &Failure, argv: &[String], input: Option<&Value>) -> ExitCode {
    let exit_code = f.class.exit_code();
    let doc = ErrorReport {
        error: ErrorBody {
            class: f.class,
            exit_code,
            message: &f.message,
            reproduction: (f.class == FailureClass::Internal).then_some(Reproduction {
                args: &argv[1..],
                input,
            }),
        },
    };
    let text = serde_json::to_string(&doc).expect("error report serializes");
    println!("{text}");
    ExitCode::from(exit_code as u8)
}

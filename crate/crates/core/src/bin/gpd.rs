use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use gpd::cli::{run, Streams};

fn main() -> ExitCode {
    let mut stdout = BufWriter::new(io::stdout().lock());
    let code = run(
        std::env::args_os(),
        &mut Streams {
            stdin: &mut io::stdin().lock(),
            stdout: &mut stdout,
            stderr: &mut io::stderr().lock(),
        },
    );
    let _ = stdout.flush();
    ExitCode::from(code)
}

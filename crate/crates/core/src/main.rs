use std::io::{self, BufReader, Write};

fn main() {
    let mut stdout = io::BufWriter::new(io::stdout());
    let code = clutter_complexity::cli::dispatch(
        std::env::args_os(),
        &mut BufReader::new(io::stdin()),
        &mut stdout,
        &mut io::stderr(),
    );
    let _ = stdout.flush();
    std::process::exit(code);
}

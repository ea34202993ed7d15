use std::io::Write;

use rexlab::cli::{run, EXIT_BUDGET};
use rexlab::CancelToken;

fn main() {
    let token = CancelToken::new();
    let on_interrupt = token.clone();
    // a second Ctrl-C while cancelling exits immediately
    let _ = ctrlc::set_handler(move || {
        if on_interrupt.is_cancelled() {
            std::process::exit(EXIT_BUDGET);
        }
        on_interrupt.cancel();
    });
    let stdin = std::io::stdin();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdin.lock(), &mut stdout, &mut stderr, token);
    let _ = stdout.flush();
    std::process::exit(code);
}

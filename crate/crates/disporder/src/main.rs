fn main() {
    // Restore default SIGPIPE handling so that piping into `head` and
    // friends terminates the process quietly instead of panicking when
    // stdout closes early.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    if let Err(e) = disporder::cli::run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

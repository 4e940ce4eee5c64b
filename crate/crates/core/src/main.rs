fn main() -> std::process::ExitCode {
    natopt::cli::main()
}

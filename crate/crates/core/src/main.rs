fn main() -> std::process::ExitCode {
    lieproj::cli::main()
}

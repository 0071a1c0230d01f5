fn main() {
    std::process::exit(cr_sphere::cli::run());
}

fn main() {
    // placeholder until the CLI module lands
    println!("hecke");
}

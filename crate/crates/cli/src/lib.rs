pub fn run<I, T>(_args: I) -> i32
where
    I: IntoIterator<Item = T>,
{
    0
}

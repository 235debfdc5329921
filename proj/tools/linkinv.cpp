// Command line interface for exact link-invariant computations (placeholder).
int main() { return 0; }

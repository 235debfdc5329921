// Acceptance suite (placeholder; filled in as modules land).
int main() { return 0; }

// Placeholder main; the CLI is assembled once the pipeline modules exist.
int main() { return 0; }

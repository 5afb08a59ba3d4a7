// placeholder main while the library comes up
int main() { return 0; }

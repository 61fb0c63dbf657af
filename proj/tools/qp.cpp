#include <cstdio>
int main(){ std::puts("qp"); return 0; }

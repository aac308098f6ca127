#include <iostream>

int main() {
  std::cout << "moritakit: placeholder\n";
  return 0;
}

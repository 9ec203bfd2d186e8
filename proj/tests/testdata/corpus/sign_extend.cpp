#include <ap_int.h>

// Sign-extend a 12-bit field stored in an unsigned register.
void top_module(unsigned int packed, ap_int<32>& extended) {
  ap_int<12> field = packed & 0xFFF;
  extended = field;
}

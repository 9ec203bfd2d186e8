#include <ap_int.h>

// Absolute difference of two unsigned bytes.
void top_module(ap_uint<8> a, ap_uint<8> b, ap_uint<8>& diff) {
  if (a > b) {
    diff = a - b;
  } else {
    diff = b - a;
  }
}

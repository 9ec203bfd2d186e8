#include <ap_int.h>

// 8-bit pulse-width modulator.
void top_module(ap_uint<8> duty, bool& out) {
  static ap_uint<8> counter = 0;
  counter = counter + 1;
  out = counter < duty;
}

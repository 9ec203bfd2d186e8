#include <ap_int.h>

// Running average over a 4-entry window.
void top_module(ap_uint<12> sample, ap_uint<12>& average, bool reset) {
  static ap_uint<12> window[4];
  static ap_uint<4> fill = 0;
  if (reset) {
    for (int i = 0; i < 4; i++) {
      window[i] = 0;
    }
    fill = 0;
  }
  for (int i = 3; i > 0; i--) {
    window[i] = window[i - 1];
  }
  window[0] = sample;
  if (fill < 4) {
    fill = fill + 1;
  }
  ap_uint<14> sum = 0;
  for (int i = 0; i < 4; i++) {
#pragma HLS UNROLL
    sum += window[i];
  }
  average = sum / 4;
}

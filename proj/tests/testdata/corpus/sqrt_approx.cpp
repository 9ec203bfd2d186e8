#include <ap_int.h>

// Integer square root by bitwise restoring iteration.
void top_module(ap_uint<16> value, ap_uint<8>& root) {
  ap_uint<16> rest = value;
  ap_uint<16> answer = 0;
  ap_uint<16> probe = 1 << 14;
  while (probe > rest) {
    probe = probe >> 2;
  }
  while (probe != 0) {
    if (rest >= answer + probe) {
      rest = rest - (answer + probe);
      answer = (answer >> 1) + probe;
    } else {
      answer = answer >> 1;
    }
    probe = probe >> 2;
  }
  root = answer;
}

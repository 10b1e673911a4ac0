int g0, g1, g2, g3, g4, g5;
int arr[8] = {-4, -8, -7, 5, 5, -4, 1, -9};
int i0, i1;

int helper(int a, int b)
{
  return a * 2 - b;
}

void bump(int k)
{
  g0 = g0 + k % 5;
}

int main(void)
{
  g0 = 1;
  g1 = 5;
  g2 = 4;
  g3 = -1;
  g4 = 2;
  g5 = -5;
  switch (g2 % 3) {
  case 0: g1 = -9; break;
  case 1: g4 = g3 ^ arr[5];
  default: g1 = g0 & g5;
  }
  for (i0 = 0; i0 < 2; i0++) g1 = 9 != 9;
  if (-9 ^ g5) g3 = arr[6] + g0;
  else g3 = g4 != g3;
  g2 = helper(arr[1], g3);
  for (i0 = 0; i0 < 8; i0++) {
    g1 = g2 % 7;
    g5++;
  }
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g3) continue;
    g0 = g5 | i0;
  }
  for (i0 = 0; i0 < 5; i0++) g1 = i0 ^ 7;
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g3) break;
    g5 = arr[0] ^ arr[3];
  }
  switch (g5 % 3) {
  case 0: g5 = -6 >= g2; break;
  case 1: g5++;
  default: bump(g5 < g3);
  }
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g4) continue;
    g5 = i0;
  }
  if (g3) g5 = helper(g0, g5);
  else g3++;
  switch (g4 % 3) {
  case 0: g0 = arr[2]; break;
  case 1: g4 = g1 ^ g0;
  default: bump(-1 % 7);
  }
  g5 = -1 * g4;
  switch (g3 % 3) {
  case 0: g2 = g1 % 7; break;
  case 1: g5 = helper(5, g5);
  default: g3 = arr[0];
  }
  i0 = 0;
  while (i0 < 4) {
    g5 = arr[0] & g5;
    i0++;
  }
  g4 = g5 >= g4;
  g2 = g5 < -5;
  for (i0 = 0; i0 < 4; i0++) g5++;
  switch (g0 % 3) {
  case 0: g2 = g5 < 9; break;
  case 1: g5++;
  default: bump(g1 % 7);
  }
  i0 = 0;
  while (i0 < 2) {
    switch (g4 % 3) {
    case 0: g2 = g2; break;
    case 1: g3 = g5 - -7;
    default: g1 = g4;
    }
    i0++;
  }
  if (arr[7] % 7) arr[3] = g5;
  else g0 = g4 + g3;
  switch (g3 % 3) {
  case 0: g0 = arr[0] + -5; break;
  case 1: g5 = g0;
  default: g4 = g2;
  }
  bump(helper(g1, 0));
  arr[5] = -8 != g2;
  switch (g1 % 3) {
  case 0: bump(g1 % 7); break;
  case 1: g4 = g5 < arr[3];
  default: bump(-4 % 7);
  }
  for (i0 = 0; i0 < 3; i0++) g5 = g2 % 7;
  for (i0 = 0; i0 < 4; i0++) g2++;
  g5 = g5;
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g1) continue;
    g2 = g3 - i0;
    bump(g5);
  }
  for (i0 = 0; i0 < 7; i0++) {
    g1 = i0;
    g3 = i0 & arr[2];
  }
  switch (g5 % 3) {
  case 0: g1 = g4 + arr[3]; break;
  case 1: g4 = -6 % 7;
  default: g1 = helper(g5, arr[7]);
  }
  i0 = 0;
  while (i0 < 4) {
    g0 = g5 & arr[2];
    i0++;
  }
  i0 = 0;
  while (i0 < 3) {
    arr[i0] = g4;
    i0++;
  }
  switch (g5 % 3) {
  case 0: arr[3] = arr[2] % 7; break;
  case 1: g5 = g3 ^ 0;
  default: g2 = arr[6];
  }
  for (i0 = 0; i0 < 6; i0++) g5 = i0 != i0;
  if (helper(-4, -2)) g2++;
  else g3 = g4 == g1;
  i0 = 0;
  while (i0 < 1) {
    i1 = 0;
    while (i1 < 3) {
      g3 = i1 - g2;
      i1++;
    }
    i0++;
  }
  switch (g1 % 3) {
  case 0: g2 = g5 % 7; break;
  case 1: g3 = g0 == g2;
  default: g5++;
  }
  i0 = 0;
  while (i0 < 1) {
    arr[i0] = arr[2] != i0;
    if (g4 > 40) break;
    i0++;
  }
  for (i0 = 0; i0 < 6; i0++) {
    bump(arr[2] % 7);
    g4++;
  }
  g3 = helper(g3, arr[7]);
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g1) continue;
    bump(helper(arr[6], arr[6]));
  }
  if (arr[1] - g0) g5 = g2 < g0;
  else g1 = g0 < g0;
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g5) break;
    g1++;
    g5++;
  }
  if (g1) arr[4] = arr[3] >= g3;
  else g3 = 1 % 7;
  i0 = 0;
  while (i0 < 2) {
    g3 = g4 < g5;
    i0++;
  }
  for (i0 = 0; i0 < 8; i0++) g4 = g4 * g1;
  switch (g1 % 3) {
  case 0: g4 = arr[6] & -1; break;
  case 1: g2 = arr[6];
  default: g2 = arr[4];
  }
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g4) break;
    g1 = g0 * i0;
  }
  g0 = g2 - g3;
  i0 = 0;
  while (i0 < 3) {
    arr[i0] = helper(-2, i0);
    i0++;
  }
  g1 = g5 - g3;
  i0 = 0;
  while (i0 < 3) {
    g2++;
    i0++;
  }
  for (i0 = 0; i0 < 2; i0++) {
    bump(i0 >= arr[7]);
    arr[i0] = i0 % 7;
    bump(g2);
  }
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g4) continue;
    g4 = g3 ^ arr[0];
    g0 = arr[4] * g5;
  }
  if (g4 % 7) arr[6] = g3 * g4;
  else g5 = g0 & g3;
  switch (g3 % 3) {
  case 0: g1 = g5 != g2; break;
  case 1: g5 = helper(arr[3], 9);
  default: bump(g1 % 7);
  }
  i0 = 0;
  while (i0 < 4) {
    bump(arr[1] != arr[4]);
    if (g4 > 40) break;
    i0++;
  }
  if (helper(g4, g4)) g4 = arr[2] & g4;
  else g0 = arr[6];
  i0 = 0;
  while (i0 < 2) {
    i1 = 0;
    while (i1 < 4) {
      g0 = 0 % 7;
      if (g2 > 40) break;
      i1++;
    }
    i0++;
  }
  if (arr[1] % 7) g0++;
  else g4 = g4 % 7;
  for (i0 = 0; i0 < 5; i0++) {
    i1 = 0;
    while (i1 < 4) {
      g1++;
      i1++;
    }
    g2 = 9 % 7;
  }
  switch (g2 % 3) {
  case 0: arr[3] = helper(-4, g2); break;
  case 1: g5 = arr[3];
  default: g1++;
  }
  if (g1) g1++;
  else g2 = -8 % 7;
  arr[1] = g3 % 7;
  g5 = helper(g4, g2);
  g2 = g5 - g0;
  switch (g0 % 3) {
  case 0: g3 = helper(g5, g2); break;
  case 1: g0++;
  default: bump(g3 % 7);
  }
  switch (g5 % 3) {
  case 0: arr[1] = -9; break;
  case 1: bump(helper(g4, 8));
  default: bump(-7);
  }
  switch (g3 % 3) {
  case 0: bump(arr[1] >= g0); break;
  case 1: g4 = g4;
  default: g5++;
  }
  for (i0 = 0; i0 < 4; i0++) {
    g3 = g3 | -2;
    arr[i0] = g1;
    arr[i0] = arr[4] % 7;
  }
  if (g4 ^ -7) g5 = -1;
  else g0 = g3 * g0;
  g2 = 7 + -4;
  for (i0 = 0; i0 < 3; i0++) {
    g4 = arr[3] * arr[7];
    g0 = arr[7] ^ g2;
  }
  for (i0 = 0; i0 < 8; i0++) {
    g3 = -3;
    g5++;
  }
  bump(g2 % 7);
  g5 = g0 | 0;
  if (g0 >= 0) arr[5] = g1 ^ arr[5];
  else arr[4] = g1 - 4;
  if (arr[7] != arr[5]) arr[2] = g4 - arr[5];
  else arr[7] = 7 * g5;
  switch (g4 % 3) {
  case 0: g4 = g0 % 7; break;
  case 1: g3 = g3;
  default: g0++;
  }
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g4) continue;
    bump(-6 % 7);
    g3 = i0 != g4;
  }
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g1) continue;
    g1 = g5;
  }
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g5) break;
    g5 = 8 + i0;
  }
  switch (g0 % 3) {
  case 0: g5 = helper(g2, arr[3]); break;
  case 1: g0++;
  default: g2++;
  }
  g4 = g1 == g2;
  for (i0 = 0; i0 < 8; i0++) {
    bump(g4 - g3);
    if (0) g3 = g0 % 7;
    else g0 = g5 % 7;
  }
  switch (g3 % 3) {
  case 0: bump(arr[4] * g0); break;
  case 1: g4 = g3 * g0;
  default: bump(helper(g4, g5));
  }
  switch (g3 % 3) {
  case 0: g0 = g0; break;
  case 1: g5 = g4 % 7;
  default: g2 = g5 == arr[2];
  }
  for (i0 = 0; i0 < 2; i0++) bump(-1 % 7);
  if (g5 != g1) g5 = g2 ^ g4;
  else g1 = g4 < g2;
  switch (g4 % 3) {
  case 0: bump(helper(g0, arr[2])); break;
  case 1: bump(g5 % 7);
  default: g3++;
  }
  if (arr[2] % 7) g2 = g5 + -4;
  else g1 = arr[4] == g4;
  bump(arr[5] % 7);
  g0 = g4 | -7;
  if (g2) g5 = g5 + g3;
  else g3++;
  if (g3 % 7) g5 = g3 * arr[7];
  else g3 = arr[4] < 5;
  g5 = g1 % 7;
  g2 = g0 | g2;
  switch (g3 % 3) {
  case 0: g3 = g3 | g0; break;
  case 1: bump(g4 * -3);
  default: g4 = -1 % 7;
  }
  for (i0 = 0; i0 < 8; i0++) {
    g3 = g3 | g2;
    g3 = arr[5];
    g3 = -2 % 7;
  }
  switch (g1 % 3) {
  case 0: g3 = g0; break;
  case 1: g0 = g0 == g5;
  default: g2 = g1 == g3;
  }
  switch (g5 % 3) {
  case 0: g3 = 7 == g5; break;
  case 1: arr[2] = g3;
  default: arr[2] = -7 % 7;
  }
  for (i0 = 0; i0 < 1; i0++) {
    arr[i0] = arr[3] % 7;
    g5 = 5;
    if (arr[0] | g3) g0 = g1 >= g0;
    else g4 = g0;
  }
  for (i0 = 0; i0 < 2; i0++) bump(g4 ^ i0);
  for (i0 = 0; i0 < 6; i0++) g1 = arr[4];
  i0 = 0;
  while (i0 < 4) {
    g3 = -6;
    i0++;
  }
  switch (g0 % 3) {
  case 0: bump(g0 == g4); break;
  case 1: arr[1] = arr[2];
  default: bump(g3 % 7);
  }
  if (g3 ^ 9) bump(g4 * 2);
  else g5 = g1 % 7;
  switch (g1 % 3) {
  case 0: g3 = arr[3] * -7; break;
  case 1: g2 = g1 - 0;
  default: g4 = 6 + arr[7];
  }
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g3) break;
    arr[i0] = helper(arr[2], 2);
    g3 = g5 % 7;
  }
  for (i0 = 0; i0 < 6; i0++) g1 = g3;
  if (helper(7, arr[0])) g0++;
  else g2 = arr[3] == arr[1];
  switch (g3 % 3) {
  case 0: g1 = g1; break;
  case 1: g3 = g5 % 7;
  default: g5 = arr[6];
  }
  for (i0 = 0; i0 < 5; i0++) g1++;
  bump(3 < g3);
  for (i0 = 0; i0 < 3; i0++) {
    g2++;
    arr[i0] = arr[3] % 7;
  }
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g2) break;
    bump(arr[3] - arr[1]);
    bump(i0 < arr[1]);
  }
  bump(g1);
  if (g0 % 7) bump(g3 >= g3);
  else g3++;
  g3 = arr[4] != 9;
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g0) break;
    arr[i0] = arr[4];
  }
  g2 = g1 ^ g5;
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g4) break;
    g4 = 8 != -2;
    bump(helper(-4, -7));
  }
  if (-8 < 7) g4++;
  else g1 = arr[4] == g0;
  g5++;
  if (arr[0] ^ 7) g2 = g5 * arr[1];
  else g5++;
  i0 = 0;
  while (i0 < 2) {
    bump(arr[7] % 7);
    i0++;
  }
  for (i0 = 0; i0 < 5; i0++) {
    g1 = 8 < i0;
    switch (g5 % 3) {
    case 0: g2++; break;
    case 1: g4 = arr[2] % 7;
    default: g4 = helper(arr[7], g1);
    }
  }
  g3 = g4 + arr[0];
  arr[4] = arr[2] % 7;
  for (i0 = 0; i0 < 2; i0++) g3 = g0 % 7;
  for (i0 = 0; i0 < 3; i0++) g4 = g5 ^ arr[7];
  for (i0 = 0; i0 < 3; i0++) g2 = arr[2] >= i0;
  g2 = 1 == g4;
  g4++;
  i0 = 0;
  while (i0 < 4) {
    g3 = -5 % 7;
    if (g3 > 40) break;
    i0++;
  }
  switch (g2 % 3) {
  case 0: arr[4] = -6 + g3; break;
  case 1: g4++;
  default: g4 = g5 >= g0;
  }
  switch (g0 % 3) {
  case 0: g4 = g1 != arr[7]; break;
  case 1: arr[0] = helper(g2, arr[7]);
  default: g4 = g3 % 7;
  }
  switch (g5 % 3) {
  case 0: bump(g2 >= g5); break;
  case 1: bump(g2 % 7);
  default: g2 = g1 % 7;
  }
  for (i0 = 0; i0 < 4; i0++) {
    g0 = arr[6] < g2;
    g5++;
  }
  switch (g0 % 3) {
  case 0: arr[3] = g2; break;
  case 1: g0 = helper(-7, g4);
  default: g2 = helper(g4, g2);
  }
  bump(g5);
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g3) continue;
    g0++;
  }
  return g0 % 100;
}

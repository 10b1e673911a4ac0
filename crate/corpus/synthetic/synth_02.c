int g0, g1, g2, g3, g4, g5;
int arr[8] = {1, -5, 7, -6, -5, 6, -7, -3};
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
  g0 = -5;
  g1 = -3;
  g2 = 1;
  g3 = 3;
  g4 = -3;
  g5 = -2;
  if (g2 != 5) g5 = 5 % 7;
  else g2 = -3 - g0;
  switch (g0 % 3) {
  case 0: g1 = g1; break;
  case 1: g4 = -4 % 7;
  default: g0 = g3 == g1;
  }
  if (4 == 4) g2 = arr[7];
  else g1++;
  arr[4] = helper(g0, arr[1]);
  switch (g1 % 3) {
  case 0: g3 = g0 == -9; break;
  case 1: g5 = g0;
  default: g0 = arr[6] - arr[3];
  }
  g0 = helper(g1, g2);
  g2 = helper(arr[1], g2);
  g3 = g5 < -5;
  g5 = helper(arr[2], g2);
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g1) continue;
    g0 = helper(arr[2], arr[3]);
    g1 = helper(g3, g3);
  }
  for (i0 = 0; i0 < 4; i0++) {
    bump(-1 % 7);
    g0 = arr[6];
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g1) break;
    bump(-4 & -5);
    g0 = g5 % 7;
  }
  if (-6 < g1) arr[0] = arr[6] % 7;
  else g2 = g0;
  i0 = 0;
  while (i0 < 4) {
    g0 = arr[0] != i0;
    i0++;
  }
  g5 = arr[0];
  for (i0 = 0; i0 < 7; i0++) arr[i0] = g0 | g0;
  for (i0 = 0; i0 < 5; i0++) g3 = g0 == 7;
  g2 = helper(g2, arr[7]);
  g1 = g0 | g4;
  g1 = g5 - -1;
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g4) break;
    g3 = g5;
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g5) break;
    g1 = 6 * g4;
  }
  switch (g0 % 3) {
  case 0: g3 = g0 ^ -2; break;
  case 1: g3++;
  default: arr[2] = -3;
  }
  g0++;
  for (i0 = 0; i0 < 2; i0++) g1 = -5 * -3;
  if (7 < 4) g5++;
  else g5 = helper(arr[2], 9);
  g2 = g4 % 7;
  switch (g5 % 3) {
  case 0: g5 = g5 < g1; break;
  case 1: bump(-8 ^ g3);
  default: g0 = 4;
  }
  if (7) g3++;
  else g4 = -8 | -2;
  if (g1) g4 = g2 % 7;
  else arr[3] = helper(g0, arr[4]);
  g5 = -3 - g4;
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g2) continue;
    g4 = arr[1] - g2;
    bump(g2 < g2);
  }
  for (i0 = 0; i0 < 1; i0++) bump(g1 & g0);
  g1 = helper(g1, -2);
  for (i0 = 0; i0 < 2; i0++) {
    if (g4) g0 = g0 % 7;
    else g3 = g5 ^ arr[5];
    g3 = helper(arr[2], i0);
  }
  for (i0 = 0; i0 < 2; i0++) bump(i0 * 8);
  if (g0 % 7) g0 = -4 % 7;
  else bump(helper(g4, arr[6]));
  g2 = g2 | g3;
  i0 = 0;
  while (i0 < 3) {
    bump(helper(g1, g3));
    if (g2 > 40) break;
    i0++;
  }
  for (i0 = 0; i0 < 2; i0++) g3 = g0 % 7;
  if (g5 % 7) g4++;
  else g3++;
  if (g2 % 7) g1 = g2 * g4;
  else g3 = 0 + g3;
  if (g0 ^ arr[2]) bump(g2 % 7);
  else g1 = g4 + g0;
  arr[1] = helper(g5, -5);
  for (i0 = 0; i0 < 7; i0++) bump(helper(i0, arr[4]));
  if (-3 >= arr[5]) arr[6] = 0 % 7;
  else g1 = g0 % 7;
  g4 = helper(5, arr[1]);
  bump(g1 * -7);
  switch (g4 % 3) {
  case 0: g5 = g4 * g5; break;
  case 1: g3 = g0 % 7;
  default: g5++;
  }
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g1) continue;
    g5++;
    g4 = -6 - g3;
  }
  g2 = g1;
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g4) break;
    arr[i0] = -7 + g2;
    g4 = g5 >= g3;
  }
  i0 = 0;
  while (i0 < 1) {
    if (helper(arr[6], g4)) arr[6] = -2 % 7;
    else g2 = g0 ^ -1;
    i0++;
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g2) break;
    g3++;
  }
  i0 = 0;
  while (i0 < 1) {
    g2++;
    i0++;
  }
  i0 = 0;
  while (i0 < 2) {
    g1++;
    i0++;
  }
  for (i0 = 0; i0 < 5; i0++) {
    arr[i0] = g5;
    g0 = g2;
    bump(g2 + g3);
  }
  arr[3] = helper(arr[3], -1);
  for (i0 = 0; i0 < 8; i0++) {
    g0 = i0 % 7;
    for (i1 = 0; i1 < 5; i1++) {
      g1 = g1 >= i1;
      if (-8) g1++;
      else g0 = 4 | 9;
      g2 = i1 * 8;
    }
  }
  g5 = helper(g4, g3);
  g4 = g0 + g0;
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g5) continue;
    g2 = 5;
  }
  if (g2 | g2) g4 = g4 % 7;
  else g5 = arr[2] % 7;
  if (helper(-1, g3)) g0 = g5 & 2;
  else arr[5] = arr[3] & g5;
  i0 = 0;
  while (i0 < 1) {
    g3 = helper(g5, arr[7]);
    if (g4 > 40) break;
    i0++;
  }
  g4++;
  if (arr[7] < 9) g3 = helper(arr[4], g0);
  else g2 = helper(g1, g5);
  if (g1 - g0) g4 = g0 * 1;
  else g1 = g5 < arr[5];
  if (g1 == g4) g5++;
  else g5 = g2 % 7;
  bump(g0 % 7);
  if (8 >= 8) g4++;
  else g1 = -5 < g5;
  g0 = g3 % 7;
  for (i0 = 0; i0 < 4; i0++) {
    bump(g2);
    for (i1 = 0; i1 < 4; i1++) g3 = helper(g0, -4);
    g2++;
  }
  g2 = -6;
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g3) break;
    g3 = g4 % 7;
  }
  for (i0 = 0; i0 < 4; i0++) {
    arr[i0] = 4 != 0;
    if (g4 | 9) arr[0] = g1 - g2;
    else g2 = g4 - arr[5];
    g5++;
  }
  g2 = -3 == g0;
  for (i0 = 0; i0 < 5; i0++) g4 = -2;
  switch (g0 % 3) {
  case 0: g3++; break;
  case 1: g1 = g2 % 7;
  default: arr[0] = arr[5] >= 5;
  }
  switch (g1 % 3) {
  case 0: g4 = -8 % 7; break;
  case 1: g3++;
  default: g5 = 0 ^ g2;
  }
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g2) continue;
    g4 = g0 ^ g0;
    g4 = g5 % 7;
  }
  if (helper(g2, g5)) g0 = g5 % 7;
  else g3 = helper(arr[0], g0);
  if (4 < -9) g5 = g0 == g2;
  else arr[5] = helper(arr[4], 9);
  arr[2] = g3 | g3;
  if (0 * arr[1]) g1 = g5;
  else g2 = g1 % 7;
  g5 = g2 * g3;
  g1 = g0 | -9;
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g2) break;
    g3 = g3;
  }
  if (g1 % 7) g0 = g4 - g5;
  else g5 = arr[7] == g3;
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g1) break;
    g5 = i0 + g4;
  }
  i0 = 0;
  while (i0 < 4) {
    g5 = g4 % 7;
    i0++;
  }
  i0 = 0;
  while (i0 < 4) {
    g2++;
    if (g0 > 40) break;
    i0++;
  }
  g4 = 4 & arr[4];
  switch (g3 % 3) {
  case 0: g2 = arr[1] < g3; break;
  case 1: g1 = helper(g3, g4);
  default: g0 = g3 ^ 3;
  }
  for (i0 = 0; i0 < 8; i0++) g2++;
  g5 = g4 % 7;
  switch (g3 % 3) {
  case 0: g4++; break;
  case 1: g0 = g4 - g2;
  default: bump(g3 | g3);
  }
  i0 = 0;
  while (i0 < 2) {
    bump(g1 + g2);
    i0++;
  }
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g0) break;
    g3++;
  }
  g1++;
  for (i0 = 0; i0 < 3; i0++) g4 = helper(g1, g0);
  g5 = 2 != arr[3];
  switch (g5 % 3) {
  case 0: g0 = helper(g5, arr[7]); break;
  case 1: g0 = helper(arr[1], arr[7]);
  default: g2 = helper(-8, g2);
  }
  if (g4) g1 = arr[7] | g2;
  else g3 = arr[7] < g4;
  i0 = 0;
  while (i0 < 4) {
    g1 = arr[5] % 7;
    i0++;
  }
  switch (g1 % 3) {
  case 0: g1++; break;
  case 1: g4 = g2 + g5;
  default: arr[0] = g5 != arr[0];
  }
  switch (g4 % 3) {
  case 0: g0 = g4 >= 6; break;
  case 1: bump(g3 == g2);
  default: g0 = g5;
  }
  for (i0 = 0; i0 < 2; i0++) g4 = i0 * i0;
  arr[7] = g0 * g3;
  if (g2 % 7) g3 = arr[6] & arr[6];
  else g4 = arr[1] % 7;
  switch (g3 % 3) {
  case 0: bump(g1 == g4); break;
  case 1: bump(8 * g4);
  default: bump(g3 < 5);
  }
  g1++;
  i0 = 0;
  while (i0 < 3) {
    for (i1 = 0; i1 < 3; i1++) {
      g2 = g0 * arr[4];
      g0 = i1 + g0;
      bump(g3 != g0);
    }
    i0++;
  }
  for (i0 = 0; i0 < 2; i0++) {
    g2 = g0 + i0;
    g0 = g1 < arr[5];
  }
  g0 = arr[2] ^ g1;
  g2 = helper(g1, g4);
  arr[6] = g1 ^ -8;
  i0 = 0;
  while (i0 < 1) {
    g1 = i0 != g0;
    if (g1 > 40) break;
    i0++;
  }
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[i0] > g0) continue;
    arr[i0] = g0 % 7;
  }
  switch (g1 % 3) {
  case 0: g5 = arr[6] != arr[5]; break;
  case 1: g3 = helper(g0, arr[2]);
  default: bump(arr[7] ^ arr[6]);
  }
  i0 = 0;
  while (i0 < 2) {
    switch (g2 % 3) {
    case 0: g3 = helper(-9, arr[2]); break;
    case 1: g3++;
    default: g5++;
    }
    i0++;
  }
  g0 = g3 % 7;
  g0++;
  i0 = 0;
  while (i0 < 4) {
    g4 = g4;
    i0++;
  }
  switch (g5 % 3) {
  case 0: arr[4] = helper(2, arr[4]); break;
  case 1: g3 = helper(g1, g5);
  default: bump(helper(g4, g4));
  }
  bump(arr[1] - -1);
  switch (g5 % 3) {
  case 0: g3 = helper(g3, -6); break;
  case 1: bump(helper(g0, 2));
  default: g1 = helper(g5, arr[7]);
  }
  i0 = 0;
  while (i0 < 4) {
    bump(arr[3] % 7);
    i0++;
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g4) continue;
    g4++;
  }
  g2++;
  g1 = helper(arr[5], g5);
  if (g0 % 7) g1 = g4;
  else bump(g4 + g2);
  g0++;
  for (i0 = 0; i0 < 2; i0++) bump(arr[2] - g1);
  if (g3) bump(g2 < arr[3]);
  else g3 = 1 + arr[0];
  if (g0) g1 = g3 % 7;
  else g5 = 2 == -3;
  for (i0 = 0; i0 < 5; i0++) {
    for (i1 = 0; i1 < 4; i1++) {
      g4 = g3 < g5;
      g1 = i1;
      bump(-4);
    }
    switch (g1 % 3) {
    case 0: g1++; break;
    case 1: g4 = 2 >= g5;
    default: g2 = g2 % 7;
    }
  }
  g5 = g0 % 7;
  for (i0 = 0; i0 < 7; i0++) {
    g4 = arr[3] >= g0;
    g5 = g0 != g4;
    g5++;
  }
  i0 = 0;
  while (i0 < 3) {
    for (i1 = 0; i1 < 4; i1++) {
      g1 = helper(i1, g0);
      bump(helper(arr[5], 1));
    }
    i0++;
  }
  if (g1 | g3) arr[2] = g0 % 7;
  else g1 = helper(-4, g5);
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g0) break;
    g2 = arr[4] ^ arr[0];
    bump(5);
  }
  if (-9 % 7) g3++;
  else g4 = -3 % 7;
  if (helper(-8, 6)) arr[4] = helper(arr[5], g2);
  else arr[4] = arr[5] != arr[4];
  for (i0 = 0; i0 < 4; i0++) {
    if (arr[i0] > g4) break;
    g5 = g0 < 0;
    arr[i0] = g0;
  }
  bump(helper(g1, g2));
  for (i0 = 0; i0 < 8; i0++) {
    g1 = g1 == i0;
    arr[i0] = helper(6, arr[7]);
  }
  i0 = 0;
  while (i0 < 2) {
    g0 = 1 != -7;
    i0++;
  }
  switch (g4 % 3) {
  case 0: bump(helper(arr[4], g0)); break;
  case 1: g3++;
  default: g0 = g2 + g1;
  }
  g2++;
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g4) continue;
    g0 = helper(g5, g4);
    arr[i0] = helper(arr[6], g2);
  }
  switch (g4 % 3) {
  case 0: g0++; break;
  case 1: g2 = helper(g5, g4);
  default: bump(g4);
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g1) continue;
    g3 = g1 != i0;
    g1 = i0;
  }
  for (i0 = 0; i0 < 6; i0++) g1 = g2 * -4;
  if (g4) g4 = g2 | arr[6];
  else g2 = g0 >= g3;
  return g0 % 100;
}

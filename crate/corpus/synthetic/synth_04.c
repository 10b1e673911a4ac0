int g0, g1, g2, g3, g4, g5;
int arr[8] = {3, -8, 0, 8, 5, -4, -8, 7};
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
  g0 = -2;
  g1 = 0;
  g2 = -5;
  g3 = 5;
  g4 = -2;
  g5 = 4;
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g0) break;
    g2 = arr[0];
    g1++;
  }
  g5 = g3 % 7;
  g1 = g5 % 7;
  if (g1 % 7) g3++;
  else g5 = g5 - g4;
  g3++;
  if (6 < g4) arr[3] = -2 % 7;
  else g0 = g0;
  for (i0 = 0; i0 < 3; i0++) {
    bump(arr[4] < 9);
    g5 = g1 != g0;
  }
  g0 = arr[3] - arr[4];
  for (i0 = 0; i0 < 6; i0++) bump(helper(g3, arr[3]));
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g0) continue;
    g3 = g3 == i0;
    g5 = arr[0] * -7;
  }
  i0 = 0;
  while (i0 < 3) {
    for (i1 = 0; i1 < 3; i1++) {
      if (arr[i1] > g0) break;
      g4 = 1 + g4;
    }
    i0++;
  }
  if (-3) g3++;
  else g5 = g5 ^ g4;
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g5) continue;
    g3 = helper(arr[0], g5);
  }
  g0 = g0;
  for (i0 = 0; i0 < 3; i0++) {
    if (arr[i0] > g5) continue;
    g0++;
  }
  for (i0 = 0; i0 < 6; i0++) g5++;
  for (i0 = 0; i0 < 7; i0++) {
    switch (g5 % 3) {
    case 0: g3 = helper(g0, g0); break;
    case 1: g3 = -1 | -6;
    default: g1 = helper(g3, g0);
    }
    for (i1 = 0; i1 < 7; i1++) {
      if (g3 & g4) g0 = g4 * g2;
      else bump(g0 % 7);
      g3 = i1 & 8;
    }
    g3 = arr[1] != g4;
  }
  for (i0 = 0; i0 < 4; i0++) g0 = i0 % 7;
  g0 = g0 - g5;
  g3 = arr[5] % 7;
  switch (g1 % 3) {
  case 0: arr[5] = g5 == arr[0]; break;
  case 1: g1 = arr[6] >= -8;
  default: g3 = g2 < g2;
  }
  for (i0 = 0; i0 < 8; i0++) g3 = arr[4] * i0;
  for (i0 = 0; i0 < 1; i0++) {
    bump(2 < g2);
    g2 = g2 ^ 2;
  }
  g2 = arr[3] % 7;
  g5 = g3 * g4;
  for (i0 = 0; i0 < 4; i0++) {
    g2 = arr[3] == i0;
    g4 = i0 % 7;
    g4++;
  }
  bump(1);
  switch (g2 % 3) {
  case 0: arr[3] = g4 < -6; break;
  case 1: g5 = g0 != -1;
  default: bump(8 ^ 6);
  }
  if (arr[4]) g2 = g1 % 7;
  else g5 = arr[4] != 9;
  if (-4 != -3) arr[1] = helper(g5, g1);
  else g4 = g3 < arr[4];
  switch (g1 % 3) {
  case 0: bump(g3); break;
  case 1: g3 = helper(g4, g5);
  default: g5 = arr[7] + g1;
  }
  for (i0 = 0; i0 < 5; i0++) {
    g0 = arr[5] != arr[5];
    g0 = helper(g1, arr[7]);
  }
  i0 = 0;
  while (i0 < 3) {
    switch (g3 % 3) {
    case 0: bump(g1 - g3); break;
    case 1: g4 = arr[2] % 7;
    default: g4 = g5 % 7;
    }
    if (g1 > 40) break;
    i0++;
  }
  if (8 % 7) g3 = helper(g3, g4);
  else bump(helper(arr[4], 8));
  i0 = 0;
  while (i0 < 4) {
    if (helper(arr[2], g3)) g2 = 5 != g5;
    else g3 = g5;
    i0++;
  }
  if (g3 + g0) g5 = g3 & g5;
  else g0 = helper(arr[0], -4);
  g5 = g3 % 7;
  g5 = g5 == g1;
  for (i0 = 0; i0 < 3; i0++) {
    g4 = helper(arr[5], g2);
    bump(-3 % 7);
    arr[i0] = arr[0] - arr[7];
  }
  if (-2 < g0) arr[4] = g2 % 7;
  else arr[1] = 2;
  g5 = g1 * g2;
  for (i0 = 0; i0 < 5; i0++) {
    g5 = arr[7] ^ g0;
    g3 = g5 != g1;
  }
  for (i0 = 0; i0 < 6; i0++) {
    if (arr[i0] > g1) continue;
    g5 = i0;
  }
  g5 = -9 != g5;
  g4 = -1;
  if (g4 % 7) arr[0] = g2;
  else arr[2] = g4 ^ g2;
  i0 = 0;
  while (i0 < 3) {
    arr[i0] = g5 % 7;
    i0++;
  }
  arr[5] = arr[1] == g3;
  i0 = 0;
  while (i0 < 4) {
    g5 = g1 ^ arr[1];
    i0++;
  }
  i0 = 0;
  while (i0 < 4) {
    arr[i0] = helper(arr[0], g3);
    i0++;
  }
  if (arr[0] != arr[0]) g4 = 5 >= arr[3];
  else g2 = g5 % 7;
  switch (g3 % 3) {
  case 0: g4++; break;
  case 1: g4 = arr[1] * arr[5];
  default: g4 = 0;
  }
  switch (g3 % 3) {
  case 0: g0 = arr[5] < g0; break;
  case 1: g1 = 3 + g0;
  default: g4 = 6 >= g0;
  }
  if (g3) bump(g2 | -5);
  else arr[1] = g2 & g3;
  g2 = g4 != g2;
  g1++;
  switch (g5 % 3) {
  case 0: g2 = g5 == g0; break;
  case 1: g1 = g5 & g4;
  default: bump(g3 % 7);
  }
  g1 = -6 == g4;
  switch (g4 % 3) {
  case 0: g2++; break;
  case 1: g0++;
  default: g3 = g1 - g5;
  }
  g5 = arr[2];
  for (i0 = 0; i0 < 3; i0++) {
    g2++;
    arr[i0] = g1;
  }
  switch (g5 % 3) {
  case 0: arr[6] = 1 < arr[4]; break;
  case 1: g3 = arr[2] != arr[3];
  default: g4 = g5 | g1;
  }
  if (-8) bump(-9);
  else g0 = g1;
  for (i0 = 0; i0 < 8; i0++) {
    bump(arr[4] * g4);
    g0 = i0 >= arr[7];
  }
  g4 = g4 + -4;
  switch (g2 % 3) {
  case 0: g0 = helper(0, g2); break;
  case 1: bump(arr[6] % 7);
  default: bump(g3 | g4);
  }
  g5 = helper(-6, g1);
  g4 = arr[2] == g5;
  i0 = 0;
  while (i0 < 1) {
    bump(i0 + g5);
    i0++;
  }
  g5 = g4 - g2;
  if (g3 & g5) g5 = g2 % 7;
  else g3++;
  g2 = g0 | g4;
  g5 = arr[2] % 7;
  g3 = 0;
  for (i0 = 0; i0 < 7; i0++) {
    arr[i0] = arr[7] != g2;
    g4++;
  }
  i0 = 0;
  while (i0 < 1) {
    g5 = arr[5] == g1;
    i0++;
  }
  switch (g3 % 3) {
  case 0: g5++; break;
  case 1: g3 = arr[5];
  default: g1 = g2 * g2;
  }
  g0++;
  arr[3] = helper(g1, g4);
  arr[5] = g5 % 7;
  for (i0 = 0; i0 < 3; i0++) {
    for (i1 = 0; i1 < 5; i1++) {
      g3 = helper(g5, g4);
      g1++;
    }
    g5 = 2;
    bump(g5 % 7);
  }
  for (i0 = 0; i0 < 7; i0++) g0 = i0 < g4;
  for (i0 = 0; i0 < 1; i0++) {
    if (arr[i0] > g5) continue;
    g3 = arr[7] % 7;
  }
  if (3 | g1) g5++;
  else g2 = g0 ^ arr[6];
  for (i0 = 0; i0 < 1; i0++) {
    g5++;
    bump(helper(g1, arr[6]));
    g3 = helper(arr[7], g5);
  }
  if (arr[6] ^ 2) g4 = g2 % 7;
  else g0 = 6 >= -7;
  for (i0 = 0; i0 < 1; i0++) g0 = g0 ^ g3;
  i0 = 0;
  while (i0 < 1) {
    g0++;
    i0++;
  }
  for (i0 = 0; i0 < 8; i0++) g2 = g4 % 7;
  for (i0 = 0; i0 < 6; i0++) g4 = g4 - arr[3];
  switch (g5 % 3) {
  case 0: arr[0] = helper(g4, g4); break;
  case 1: bump(g0 == g3);
  default: g5 = g2;
  }
  g2 = helper(g0, g4);
  g5 = arr[6];
  i0 = 0;
  while (i0 < 1) {
    g0 = g5 + g0;
    i0++;
  }
  switch (g2 % 3) {
  case 0: bump(g1 % 7); break;
  case 1: arr[4] = 4 - g0;
  default: g2 = g4 + g3;
  }
  for (i0 = 0; i0 < 1; i0++) bump(g5 == i0);
  for (i0 = 0; i0 < 2; i0++) g1 = i0 % 7;
  if (g0) g1 = arr[7] != g2;
  else bump(5);
  i0 = 0;
  while (i0 < 1) {
    arr[i0] = g1 % 7;
    i0++;
  }
  bump(helper(g5, g2));
  for (i0 = 0; i0 < 7; i0++) {
    g2++;
    i1 = 0;
    while (i1 < 3) {
      g0 = g0 % 7;
      i1++;
    }
  }
  for (i0 = 0; i0 < 4; i0++) {
    for (i1 = 0; i1 < 7; i1++) {
      if (arr[i1] > g3) break;
      bump(arr[4] < g0);
    }
    g1 = helper(g4, -3);
  }
  i0 = 0;
  while (i0 < 3) {
    g1 = 1 % 7;
    if (g2 > 40) break;
    i0++;
  }
  g0++;
  for (i0 = 0; i0 < 5; i0++) {
    g0 = -3;
    g2 = i0 == g0;
    g1++;
  }
  bump(helper(g3, g2));
  for (i0 = 0; i0 < 7; i0++) {
    if (arr[2] * g0) bump(0 < 1);
    else bump(arr[3] % 7);
    for (i1 = 0; i1 < 5; i1++) {
      bump(arr[0] % 7);
      if (1 - -8) g5 = g1;
      else bump(helper(g5, g4));
      g5 = arr[7] % 7;
    }
  }
  bump(g0 & arr[6]);
  if (g5) arr[0] = g2;
  else g1 = arr[1] % 7;
  if (5) g0 = g3 % 7;
  else g5 = arr[3] - g5;
  switch (g2 % 3) {
  case 0: bump(g5 ^ g0); break;
  case 1: g3 = g2 ^ -9;
  default: g4++;
  }
  if (g0) g3 = -9 % 7;
  else bump(arr[3]);
  for (i0 = 0; i0 < 1; i0++) g3 = g5 % 7;
  for (i0 = 0; i0 < 8; i0++) g4 = arr[1];
  g0 = helper(g2, -3);
  for (i0 = 0; i0 < 2; i0++) {
    if (arr[i0] > g2) continue;
    arr[i0] = g4 + arr[1];
    g4 = arr[2];
  }
  for (i0 = 0; i0 < 1; i0++) g4 = helper(g5, arr[3]);
  if (-2 % 7) arr[3] = g5;
  else bump(-3 == arr[2]);
  for (i0 = 0; i0 < 8; i0++) {
    bump(g0 < -2);
    g3 = 3;
    g3 = 2 == arr[7];
  }
  for (i0 = 0; i0 < 1; i0++) arr[i0] = i0 ^ 4;
  g1 = helper(3, g5);
  for (i0 = 0; i0 < 6; i0++) {
    arr[i0] = i0;
    g1 = g4;
  }
  if (g3 % 7) g0 = 2 % 7;
  else g1 = -3 * g4;
  for (i0 = 0; i0 < 5; i0++) {
    g2 = arr[2] & -2;
    for (i1 = 0; i1 < 8; i1++) g4 = g0;
    arr[i0] = g1 ^ g0;
  }
  if (g0 & 4) bump(arr[7]);
  else g0 = g2 % 7;
  switch (g4 % 3) {
  case 0: g2 = 4 % 7; break;
  case 1: g4 = arr[6] & -6;
  default: g3 = helper(g2, 6);
  }
  if (g2 < arr[0]) g4 = arr[1];
  else bump(arr[4] % 7);
  g3++;
  if (helper(g1, g4)) arr[6] = g3 % 7;
  else g1 = 5 != arr[6];
  switch (g0 % 3) {
  case 0: g3 = helper(g5, g2); break;
  case 1: arr[6] = helper(g3, g5);
  default: arr[1] = arr[7] + arr[3];
  }
  switch (g1 % 3) {
  case 0: g1 = g5 != 7; break;
  case 1: g4 = g3;
  default: arr[0] = g2 ^ g4;
  }
  for (i0 = 0; i0 < 7; i0++) {
    switch (g0 % 3) {
    case 0: g5 = arr[4] < g0; break;
    case 1: g4 = g1 % 7;
    default: arr[6] = helper(arr[1], g5);
    }
    g4 = g2;
    switch (g0 % 3) {
    case 0: g4 = g3 - -9; break;
    case 1: bump(g4 != arr[1]);
    default: g2 = g5 * g2;
    }
  }
  switch (g0 % 3) {
  case 0: g0 = helper(-5, arr[0]); break;
  case 1: g3++;
  default: g3 = 3 & 7;
  }
  for (i0 = 0; i0 < 7; i0++) bump(arr[4] % 7);
  g0 = helper(g3, 8);
  switch (g5 % 3) {
  case 0: g0 = g0 ^ g0; break;
  case 1: g4++;
  default: bump(g3);
  }
  switch (g3 % 3) {
  case 0: g0 = g3; break;
  case 1: g5++;
  default: g3 = g0 | g5;
  }
  if (g3 < g1) g0++;
  else bump(g4 == g3);
  g5 = -1;
  g2++;
  if (g3 ^ g2) g1 = helper(g2, g4);
  else g5 = g3 - g5;
  switch (g4 % 3) {
  case 0: g1++; break;
  case 1: bump(9 % 7);
  default: arr[5] = 4 == arr[1];
  }
  arr[4] = helper(g1, g4);
  switch (g1 % 3) {
  case 0: arr[3] = arr[6] * g5; break;
  case 1: arr[2] = g0;
  default: arr[4] = g2 % 7;
  }
  arr[5] = g0 ^ g1;
  if (arr[7]) g1 = g1 != 0;
  else g5 = arr[2] - g3;
  if (arr[3] * -1) bump(helper(g1, g2));
  else g5 = g2 - 1;
  if (arr[3] ^ 5) bump(helper(g4, g5));
  else arr[5] = arr[5] % 7;
  g3 = -5 - -8;
  switch (g1 % 3) {
  case 0: g1++; break;
  case 1: g0++;
  default: g2 = g0 < 6;
  }
  arr[3] = arr[0];
  if (g2 >= g3) g5++;
  else g4 = helper(g3, g1);
  for (i0 = 0; i0 < 8; i0++) {
    if (arr[i0] > g5) continue;
    g2 = i0 & arr[1];
  }
  switch (g2 % 3) {
  case 0: g0 = helper(g1, g0); break;
  case 1: g1 = -9;
  default: g3 = helper(g2, arr[5]);
  }
  if (arr[5] + g0) g5 = helper(g0, -9);
  else g5 = arr[5] < g0;
  for (i0 = 0; i0 < 5; i0++) {
    if (arr[i0] > g0) break;
    arr[i0] = g2 >= g4;
    g2++;
  }
  for (i0 = 0; i0 < 1; i0++) {
    arr[i0] = g1;
    bump(arr[6]);
  }
  return g0 % 100;
}

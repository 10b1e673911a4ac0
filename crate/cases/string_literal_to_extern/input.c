char *msg;
int done;

int main(void)
{
  msg = "hello";
  puts(msg);
  done = 1;
  return 0;
}
